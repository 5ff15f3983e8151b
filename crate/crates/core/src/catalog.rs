//! A fixed list of small groups used by `catalog` and the test suites.

use rayon::prelude::*;

use crate::classify::{classify, ClassificationReport};
use crate::error::Result;
use crate::group::{build_group_with, BuildOptions, FiniteGroup};
use crate::parser::parse_group_spec;
use crate::spec::GroupSpec;

/// Catalog entries with their orders, in output order.
pub const CATALOG: &[(&str, usize)] = &[
    ("C1", 1),
    ("C2", 2),
    ("C3", 3),
    ("C4", 4),
    ("C2 x C2", 4),
    ("C5", 5),
    ("C6", 6),
    ("S3", 6),
    ("Dih(C3)", 6),
    ("C7", 7),
    ("C8", 8),
    ("C2 x C4", 8),
    ("C2 x C2 x C2", 8),
    ("D8", 8),
    ("Q8", 8),
    ("Heis(2)", 8),
    ("C9", 9),
    ("C3 x C3", 9),
    ("C10", 10),
    ("D10", 10),
    ("Dih(C5)", 10),
    ("C11", 11),
    ("C12", 12),
    ("D12", 12),
    ("A4", 12),
    ("Q8 x C2", 16),
    ("D16", 16),
    ("C4 x C4", 16),
    ("D8 x C2", 16),
    ("D18", 18),
    ("Dih(C9)", 18),
    ("Dih(C3 x C3)", 18),
    ("S4", 24),
    ("SL(2,3)", 24),
    ("D8 x C3", 24),
    ("Heis(3)", 27),
    ("Dih(C15)", 30),
    ("D32", 32),
    ("S3 x S3", 36),
    ("A4 x C3", 36),
    ("Q8 x C4", 32),
    ("Q8 x C2 x C2 x C2", 64),
    ("Q8 x Q8", 64),
    ("D8 x D8", 64),
    ("A5", 60),
    ("S4 x C2", 48),
    ("Heis(5)", 125),
    ("S5", 120),
    ("SL(3,2)", 168),
    ("Heis(2) x Heis(3)", 216),
    ("Heis(3) x C3 x C3", 243),
    ("A5 x S3", 360),
    ("ASL(3,2)", 1344),
];

pub fn catalog_specs(max_order: Option<usize>) -> Vec<GroupSpec> {
    let mut entries: Vec<(usize, usize, GroupSpec)> = CATALOG
        .iter()
        .enumerate()
        .filter(|(_, (_, order))| max_order.is_none_or(|m| *order <= m))
        .map(|(i, (text, order))| {
            (
                *order,
                i,
                parse_group_spec(text).expect("catalog specs parse"),
            )
        })
        .collect();
    entries.sort_by_key(|(order, i, _)| (*order, *i));
    entries.into_iter().map(|(_, _, spec)| spec).collect()
}

pub fn catalog_groups(
    max_order: Option<usize>,
    options: &BuildOptions,
) -> Result<Vec<FiniteGroup>> {
    catalog_specs(max_order)
        .par_iter()
        .map(|spec| build_group_with(spec, options))
        .collect()
}

/// Classifies every catalog group up to `max_order` in parallel; results keep catalog order.
pub fn classify_catalog(
    max_order: Option<usize>,
    options: &BuildOptions,
) -> Result<Vec<ClassificationReport>> {
    catalog_specs(max_order)
        .par_iter()
        .map(|spec| classify(&build_group_with(spec, options)?))
        .collect()
}
