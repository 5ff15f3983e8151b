use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use topolab::catalog::classify_catalog;
use topolab::classify::{classify, ClassificationReport};
use topolab::parser::{parse_generators, parse_group_spec};
use topolab::perm_action::{
    build_centralizing_witness, full_symmetric_centralizer, lemma_trivial_centralizer, orbit_data,
    CriterionFailure, PermAction, DEFAULT_ACTION_CAP,
};
use topolab::report::{emit_report_json, emit_reports_json, lattice, render_dot};
use topolab::semitop::{is_semitopological, min_steps};
use topolab::subgroup::all_normal_subgroups;
use topolab::{
    build_group_with, make_topology, BuildOptions, Error, FiniteGroup, Permutation, Result,
};

const ORDER_CAP_VAR: &str = "TOPOLAB_ORDER_CAP";

/// Appends a line to the command's output buffer.
macro_rules! say {
    ($out:expr, $($arg:tt)*) => {{
        use std::fmt::Write as _;
        writeln!($out, $($arg)*).expect("writing to a String cannot fail")
    }};
}

#[derive(Parser)]
#[command(
    name = "topolab",
    version,
    about = "Almost trivial topologies on finite groups"
)]
struct Cli {
    /// Seed for randomized checks, echoed into reports.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Taimanov / Arnautov / A-completeness classification of one group.
    Classify {
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether id: (G, ζ_from) → (G, ζ_to) is semitopological.
    Semitop {
        spec: String,
        /// Index of the finer kernel, as printed by `lattice`.
        #[arg(long)]
        from: usize,
        /// Index of the coarser kernel.
        #[arg(long)]
        to: usize,
        /// Also report the least number of semitopological steps.
        #[arg(long)]
        steps: bool,
    },
    /// Write the normal subgroup lattice as DOT and list the subgroup indices.
    Lattice {
        spec: String,
        #[arg(long)]
        dot: PathBuf,
    },
    /// Classify every built-in group up to an order bound.
    Catalog {
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Orbits, stabilizers and centralizer triviality of a permutation group.
    Perm {
        #[arg(long)]
        degree: usize,
        /// Comma separated generators in cycle notation, e.g. "(0 1 2),(0 1)(3 4)".
        #[arg(long, allow_hyphen_values = true)]
        gens: String,
        #[arg(long)]
        check_lemma: bool,
        /// Also scan the full symmetric group for the centralizer (degree ≤ 8).
        #[arg(long)]
        oracle: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    match run(&cli, &mut out) {
        Ok(()) => {
            let mut stdout = std::io::stdout().lock();
            match stdout
                .write_all(out.as_bytes())
                .and_then(|()| stdout.flush())
            {
                Ok(()) => ExitCode::SUCCESS,
                // a closed pipe (e.g. `| head`) is not an error
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::FAILURE
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. } | Error::InvalidSpec(_) => 2,
        Error::OrderCapExceeded { .. } | Error::DegreeTooLarge { .. } => 3,
        _ => 1,
    }
}

fn order_cap(default: usize) -> Result<usize> {
    match std::env::var(ORDER_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .ok()
            .filter(|&c: &usize| c > 0)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "{ORDER_CAP_VAR} must be a positive integer, got {v:?}"
                ))
            }),
        Err(_) => Ok(default),
    }
}

fn options(seed: u64) -> Result<BuildOptions> {
    Ok(BuildOptions {
        order_cap: order_cap(BuildOptions::default().order_cap)?,
        seed,
    })
}

fn build(spec: &str, seed: u64) -> Result<FiniteGroup> {
    build_group_with(&parse_group_spec(spec)?, &options(seed)?)
}

fn run(cli: &Cli, out: &mut String) -> Result<()> {
    match &cli.command {
        Command::Classify { spec, json } => {
            let report = classify(&build(spec, cli.seed)?)?;
            if *json {
                say!(out, "{}", emit_report_json(&report, cli.seed));
            } else {
                print_report(out, &report);
            }
        }
        Command::Semitop {
            spec,
            from,
            to,
            steps,
        } => semitop(out, &build(spec, cli.seed)?, *from, *to, *steps)?,
        Command::Lattice { spec, dot } => {
            let group = build(spec, cli.seed)?;
            let lat = lattice(&group)?;
            std::fs::write(dot, render_dot(&group, &lat)).map_err(|e| {
                Error::InvalidArgument(format!("cannot write {}: {e}", dot.display()))
            })?;
            for (k, n) in lat.normals.iter().enumerate() {
                say!(out, "N#{k}\torder {}\t[G:N] {}", n.order(), n.index());
            }
        }
        Command::Catalog { max_order, json } => {
            let reports = classify_catalog(*max_order, &options(cli.seed)?)?;
            if *json {
                say!(out, "{}", emit_reports_json(&reports, cli.seed));
            } else {
                say!(
                    out,
                    "{:<20} {:>6} {:>3} perfect taimanov totally arnautov",
                    "spec",
                    "order",
                    "|Z|"
                );
                for r in &reports {
                    say!(
                        out,
                        "{:<20} {:>6} {:>3} {:<7} {:<8} {:<7} {}",
                        spec_name(r),
                        r.order,
                        r.center_order,
                        r.is_perfect,
                        r.is_taimanov,
                        r.is_totally_taimanov,
                        r.is_arnautov
                    );
                }
            }
        }
        Command::Perm {
            degree,
            gens,
            check_lemma,
            oracle,
        } => perm(out, *degree, gens, *check_lemma, *oracle)?,
    }
    Ok(())
}

fn spec_name(r: &ClassificationReport) -> String {
    r.spec.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_report(out: &mut String, r: &ClassificationReport) {
    say!(out, "group            {}", spec_name(r));
    say!(out, "order            {}", r.order);
    say!(out, "center order     {}", r.center_order);
    say!(out, "perfect          {}", yes_no(r.is_perfect));
    say!(out, "taimanov         {}", yes_no(r.is_taimanov));
    say!(out, "totally taimanov {}", yes_no(r.is_totally_taimanov));
    say!(out, "arnautov         {}", yes_no(r.is_arnautov));
    say!(out, "markov           yes (finite)");
    let w = &r.witnesses;
    for (name, index) in [
        ("perfect", w.perfect),
        ("taimanov", w.taimanov),
        ("totally taimanov", w.totally_taimanov),
        ("arnautov", w.arnautov),
    ] {
        if let Some(k) = index {
            say!(out, "not {name}: witness N#{k}");
        }
    }
    say!(out, "");
    say!(out, "N#   order  [G,N]  A-complete");
    for e in &r.normal_subgroups {
        let refuted = e
            .a_complete_witness
            .map(|k| format!(" (via N#{k})"))
            .unwrap_or_default();
        say!(
            out,
            "{:<4} {:>5}  {:>5}  {}{}",
            e.index,
            e.subgroup.order(),
            e.commutator_with_g_order,
            yes_no(e.a_complete),
            refuted
        );
    }
}

fn element_label(group: &FiniteGroup, x: topolab::Element) -> String {
    group
        .permutation(x)
        .map(|p| p.to_string())
        .unwrap_or_else(|| format!("#{x}"))
}

fn semitop(
    out: &mut String,
    group: &FiniteGroup,
    from: usize,
    to: usize,
    steps: bool,
) -> Result<()> {
    let normals = all_normal_subgroups(group)?;
    let pick = |k: usize| {
        normals.get(k).cloned().ok_or_else(|| {
            Error::InvalidArgument(format!(
                "no normal subgroup N#{k}; the group has {}",
                normals.len()
            ))
        })
    };
    let finer = make_topology(group, &pick(from)?)?;
    let coarser = make_topology(group, &pick(to)?)?;
    let verdict = is_semitopological(&finer, &coarser)?;
    say!(
        out,
        "semitopological  {}",
        yes_no(verdict.is_semitopological)
    );
    if let Some((g, l)) = verdict.violating_pair {
        say!(
            out,
            "violating pair   g = {}, l = {}, [g,l] = {}",
            element_label(group, g),
            element_label(group, l),
            element_label(group, group.commutator(g, l))
        );
    }
    if steps {
        let count = min_steps(&finer, &coarser)?;
        match count.steps {
            Some(n) => {
                let orders: Vec<String> =
                    count.chain.iter().map(|k| k.order().to_string()).collect();
                say!(out, "min steps        {n}");
                say!(out, "chain orders     {}", orders.join(" > "));
            }
            None => say!(out, "min steps        none"),
        }
    }
    Ok(())
}

fn perm(
    out: &mut String,
    degree: usize,
    gens: &str,
    check_lemma: bool,
    oracle: bool,
) -> Result<()> {
    let cycles = parse_generators(gens)?;
    let perms = cycles
        .iter()
        .map(|c| Permutation::from_cycles(degree, c))
        .collect::<Result<Vec<_>>>()?;
    let action = PermAction::with_cap(degree, perms, order_cap(DEFAULT_ACTION_CAP)?)?;
    let data = orbit_data(&action)?;
    say!(out, "order            {}", action.group().order());
    for ((orbit, rep), stab) in data
        .orbits
        .iter()
        .zip(&data.representatives)
        .zip(&data.stabilizers)
    {
        let points: Vec<String> = orbit.iter().map(ToString::to_string).collect();
        say!(
            out,
            "orbit of {rep:<7} {{{}}}  |S_{rep}| = {}",
            points.join(", "),
            stab.order()
        );
    }
    if check_lemma {
        let verdict = lemma_trivial_centralizer(&action)?;
        say!(
            out,
            "trivial centralizer (criterion)  {}",
            yes_no(verdict.trivial_centralizer)
        );
        if let Some(failure) = &verdict.failure {
            match failure {
                CriterionFailure::NotSelfNormalizing { representative, h0 } => say!(
                    out,
                    "failure: S_{representative} is not self-normalizing, h0 = {}",
                    action.permutation(*h0)
                ),
                CriterionFailure::ConjugateStabilizers {
                    first,
                    second,
                    conjugator,
                } => say!(
                    out,
                    "failure: S_{first} and S_{second} are conjugate by {}",
                    action.permutation(*conjugator)
                ),
            }
            say!(
                out,
                "centralizing witness {}",
                build_centralizing_witness(&action, failure)?
            );
        }
    }
    if oracle {
        let c = full_symmetric_centralizer(&action)?;
        say!(out, "centralizer order (exhaustive)   {}", c.len());
        if check_lemma {
            let verdict = lemma_trivial_centralizer(&action)?;
            if verdict.trivial_centralizer != (c.len() == 1) {
                return Err(Error::InternalInconsistency(
                    "criterion and exhaustive scan disagree".into(),
                ));
            }
        }
    }
    Ok(())
}
