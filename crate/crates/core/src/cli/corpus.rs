//! The shipped corpus of instances.

use std::path::Path;

use super::format::{parse, parse_str, FormatError, Object};

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    /// `kind/name`, without extension.
    pub name: String,
    pub object: Object,
}

/// The shipped files as `(name, text)`.
pub const FILES: &[(&str, &str)] = &[
    ("functor/chaotic3_to_terminal", include_str!("../../corpus/functor/chaotic3_to_terminal.json")),
    ("functor/discrete2_to_interval", include_str!("../../corpus/functor/discrete2_to_interval.json")),
    ("functor/discrete2_to_terminal", include_str!("../../corpus/functor/discrete2_to_terminal.json")),
    ("functor/discrete2_to_z2", include_str!("../../corpus/functor/discrete2_to_z2.json")),
    ("functor/discrete3_to_discrete2", include_str!("../../corpus/functor/discrete3_to_discrete2.json")),
    ("functor/interval_identity", include_str!("../../corpus/functor/interval_identity.json")),
    ("functor/interval_swap", include_str!("../../corpus/functor/interval_swap.json")),
    ("functor/interval_to_chaotic3", include_str!("../../corpus/functor/interval_to_chaotic3.json")),
    ("functor/interval_to_terminal", include_str!("../../corpus/functor/interval_to_terminal.json")),
    ("functor/interval_to_z2", include_str!("../../corpus/functor/interval_to_z2.json")),
    ("functor/klein_to_terminal", include_str!("../../corpus/functor/klein_to_terminal.json")),
    ("functor/klein_to_z2", include_str!("../../corpus/functor/klein_to_z2.json")),
    ("functor/point_to_discrete2", include_str!("../../corpus/functor/point_to_discrete2.json")),
    ("functor/point_to_interval", include_str!("../../corpus/functor/point_to_interval.json")),
    ("functor/point_to_z2", include_str!("../../corpus/functor/point_to_z2.json")),
    ("functor/z2_identity", include_str!("../../corpus/functor/z2_identity.json")),
    ("functor/z2_plus_point_to_interval", include_str!("../../corpus/functor/z2_plus_point_to_interval.json")),
    ("functor/z2_plus_point_to_terminal", include_str!("../../corpus/functor/z2_plus_point_to_terminal.json")),
    ("functor/z2_plus_point_to_z2", include_str!("../../corpus/functor/z2_plus_point_to_z2.json")),
    ("functor/z2_plus_z2_to_z2", include_str!("../../corpus/functor/z2_plus_z2_to_z2.json")),
    ("functor/z2_to_klein", include_str!("../../corpus/functor/z2_to_klein.json")),
    ("functor/z2_to_terminal", include_str!("../../corpus/functor/z2_to_terminal.json")),
    ("functor/z2_to_z4", include_str!("../../corpus/functor/z2_to_z4.json")),
    ("functor/z3_squaring", include_str!("../../corpus/functor/z3_squaring.json")),
    ("functor/z3_to_terminal", include_str!("../../corpus/functor/z3_to_terminal.json")),
    ("functor/z4_inversion", include_str!("../../corpus/functor/z4_inversion.json")),
    ("functor/z4_to_terminal", include_str!("../../corpus/functor/z4_to_terminal.json")),
    ("functor/z4_to_z2", include_str!("../../corpus/functor/z4_to_z2.json")),
    ("groupoid/chaotic3", include_str!("../../corpus/groupoid/chaotic3.json")),
    ("groupoid/discrete2", include_str!("../../corpus/groupoid/discrete2.json")),
    ("groupoid/discrete3", include_str!("../../corpus/groupoid/discrete3.json")),
    ("groupoid/interval", include_str!("../../corpus/groupoid/interval.json")),
    ("groupoid/klein", include_str!("../../corpus/groupoid/klein.json")),
    ("groupoid/terminal", include_str!("../../corpus/groupoid/terminal.json")),
    ("groupoid/z2", include_str!("../../corpus/groupoid/z2.json")),
    ("groupoid/z2_plus_point", include_str!("../../corpus/groupoid/z2_plus_point.json")),
    ("groupoid/z2_plus_z2", include_str!("../../corpus/groupoid/z2_plus_z2.json")),
    ("groupoid/z3", include_str!("../../corpus/groupoid/z3.json")),
    ("groupoid/z4", include_str!("../../corpus/groupoid/z4.json")),
    ("problem/horn1_0_into_point_in_interval", include_str!("../../corpus/problem/horn1_0_into_point_in_interval.json")),
    ("sgpd-map/constant_interval_to_terminal", include_str!("../../corpus/sgpd-map/constant_interval_to_terminal.json")),
    ("sgpd-map/constant_point_to_interval", include_str!("../../corpus/sgpd-map/constant_point_to_interval.json")),
    ("sgpd/constant_interval", include_str!("../../corpus/sgpd/constant_interval.json")),
    ("sgpd/constant_z2", include_str!("../../corpus/sgpd/constant_z2.json")),
    ("sset-map/boundary1_in_delta1", include_str!("../../corpus/sset-map/boundary1_in_delta1.json")),
    ("sset-map/horn2_1_in_delta2", include_str!("../../corpus/sset-map/horn2_1_in_delta2.json")),
    ("sset/boundary1", include_str!("../../corpus/sset/boundary1.json")),
    ("sset/boundary2", include_str!("../../corpus/sset/boundary2.json")),
    ("sset/delta0", include_str!("../../corpus/sset/delta0.json")),
    ("sset/delta1", include_str!("../../corpus/sset/delta1.json")),
    ("sset/delta2", include_str!("../../corpus/sset/delta2.json")),
    ("sset/delta3", include_str!("../../corpus/sset/delta3.json")),
    ("sset/horn2_0", include_str!("../../corpus/sset/horn2_0.json")),
    ("sset/horn2_1", include_str!("../../corpus/sset/horn2_1.json")),
    ("sset/horn3_1", include_str!("../../corpus/sset/horn3_1.json")),
];

pub fn entries() -> Result<Vec<CorpusEntry>, FormatError> {
    FILES.iter().map(|(name, text)| Ok(CorpusEntry { name: name.to_string(), object: parse_str(text)? })).collect()
}

/// Reads every `.json` file under `dir`, sorted by path.
pub fn load_dir(dir: &Path) -> Result<Vec<CorpusEntry>, FormatError> {
    let mut paths = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        let rd = std::fs::read_dir(&d).map_err(|source| FormatError::Io { path: d.display().to_string(), source })?;
        for e in rd {
            let p = e.map_err(|source| FormatError::Io { path: d.display().to_string(), source })?.path();
            if p.is_dir() {
                stack.push(p);
            } else if p.extension().is_some_and(|x| x == "json") {
                paths.push(p);
            }
        }
    }
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let name = p.strip_prefix(dir).unwrap_or(&p).with_extension("").display().to_string();
            Ok(CorpusEntry { name, object: parse(&p)? })
        })
        .collect()
}
