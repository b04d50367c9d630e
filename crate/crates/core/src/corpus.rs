//! The checked-in list of groups verified by `corpus` runs.

use crate::group::GroupSpec;

const MANIFEST: &str = include_str!("../corpus.manifest");

/// Order below which every group is solvable.
pub const SOLVABLE_ORDER_BOUND: u128 = 60;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub spec: GroupSpec,
    pub solvable: bool,
}

/// Parses manifest text: one spec per line, `#` comments, and an optional
/// `nonsolvable` flag after the spec.
pub fn parse_manifest(text: &str) -> Result<Vec<CorpusEntry>, String> {
    let mut out = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let spec_text = words.next().expect("nonempty line");
        let spec = GroupSpec::parse(spec_text).map_err(|e| format!("line {}: {e}", no + 1))?;
        let solvable = match words.next() {
            None => true,
            Some("nonsolvable") => false,
            Some(other) => return Err(format!("line {}: unknown flag {other:?}", no + 1)),
        };
        if solvable && spec.nominal_order().is_some_and(|n| n >= SOLVABLE_ORDER_BOUND) {
            return Err(format!("line {}: order >= 60 needs an explicit flag", no + 1));
        }
        out.push(CorpusEntry { spec, solvable });
    }
    Ok(out)
}

/// The built-in corpus, in manifest order.
pub fn corpus() -> Vec<CorpusEntry> {
    parse_manifest(MANIFEST).expect("the checked-in manifest is valid")
}

/// Corpus entries of order at most `max_order`.
pub fn corpus_up_to(max_order: usize) -> Vec<CorpusEntry> {
    corpus()
        .into_iter()
        .filter(|e| e.spec.nominal_order().is_some_and(|n| n <= max_order as u128))
        .collect()
}

/// Whether the nonvanishing check applies: the manifest's flag when the spec
/// is listed, otherwise the order bound.
pub fn known_solvable(spec: &GroupSpec, order: usize) -> bool {
    corpus()
        .into_iter()
        .find(|e| &e.spec == spec)
        .map_or((order as u128) < SOLVABLE_ORDER_BOUND, |e| e.solvable)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_parses() {
        let all = corpus();
        assert!(all.len() > 50);
        assert_eq!(all[0].spec.to_string(), "C1");
        assert_eq!(all.iter().filter(|e| !e.solvable).count(), 2);
        assert!(corpus_up_to(24).iter().all(|e| e.solvable));
    }

    #[test]
    fn manifest_errors() {
        assert!(parse_manifest("C2 weird").is_err());
        assert!(parse_manifest("A5").is_err());
        assert!(parse_manifest("C2\n\n# c\nS3 # tail").unwrap().len() == 2);
        assert!(parse_manifest("X9").is_err());
    }

    #[test]
    fn solvability_lookup() {
        assert!(!known_solvable(&GroupSpec::parse("S5").unwrap(), 120));
        assert!(known_solvable(&GroupSpec::parse("C7xC3").unwrap(), 21));
        assert!(!known_solvable(&GroupSpec::parse("C60").unwrap(), 60));
    }
}
