//! Preset mean pairs and inequality chains.

use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::verify::{ChainSpec, RelationKind};

/// A mean pair with the relation it is claimed to satisfy: ratio means
/// M/M' <= N/N', harmonic means 1/M - 1/M' <= 1/N - 1/N'.
#[derive(Debug, Clone)]
pub struct PresetPair {
    pub m: String,
    pub n: String,
    pub relation: RelationKind,
}

impl PresetPair {
    fn new(m: &str, n: &str, relation: RelationKind) -> Self {
        PresetPair { m: m.into(), n: n.into(), relation }
    }
}

const A_THIRD: &str = "Ar(0.3333333333333333)";
const A_TWO_THIRDS: &str = "Ar(0.6666666666666666)";

/// Every pair claimed in the source material, in a fixed order.
pub fn preset_pairs() -> Vec<PresetPair> {
    use RelationKind::{Harmonic, Ratio};
    let mut pairs = Vec::new();
    // the ratio chain G <= L <= P <= A <= NS <= T plus the Q extension
    for w in ["G", "L", "P", "A", "NS", "T", "Q"].windows(2) {
        pairs.push(PresetPair::new(w[0], w[1], Ratio));
    }
    // power mean orderings
    for (r, s) in [(-1.0, 0.0), (0.0, 1.0), (1.0 / 3.0, 0.5), (1.0, 2.0)] {
        pairs.push(PresetPair::new(&format!("Ar({r})"), &format!("Ar({s})"), Ratio));
    }
    // Heronian between the 1/2 and 2/3 power means
    pairs.push(PresetPair::new("Ar(0.5)", "He", Ratio));
    pairs.push(PresetPair::new("He", A_TWO_THIRDS, Ratio));
    // logarithmic mean below the 1/3 power mean
    pairs.push(PresetPair::new("L", A_THIRD, Ratio));
    // remaining ratio claims
    pairs.push(PresetPair::new("Ssinh", "A", Ratio));
    pairs.push(PresetPair::new("Ar(0.5)", "P", Ratio));
    pairs.push(PresetPair::new("L", "Stan", Ratio));
    // harmonic chain above the arithmetic mean
    for w in ["Stanh", "T", "Ssin", "NS", "A"].windows(2) {
        pairs.push(PresetPair::new(w[0], w[1], Harmonic));
    }
    // harmonic chain below, with the two incomparable branch members
    for (m, n) in [("A", "Ssinh"), ("Ssinh", "Stan"), ("Stan", "L"), ("Ssinh", "P"), ("P", "L")] {
        pairs.push(PresetPair::new(m, n, Harmonic));
    }
    pairs
}

/// Named chain presets. `harmonic-lower` expands to two linear chains
/// because its two branch members are not comparable with each other.
pub fn chain_preset(name: &str, grid: GridSpec) -> Result<Vec<ChainSpec>> {
    let chains: Vec<(Vec<&str>, RelationKind)> = match name {
        "ns2003" => vec![(vec!["G", "L", "P", "A", "NS", "T"], RelationKind::Ratio)],
        "ns2003-extended" => vec![(vec!["G", "L", "P", "A", "NS", "T", "Q"], RelationKind::Ratio)],
        "harmonic-upper" => vec![(vec!["Stanh", "T", "Ssin", "NS", "A"], RelationKind::Harmonic)],
        "harmonic-lower" => vec![
            (vec!["A", "Ssinh", "Stan", "L"], RelationKind::Harmonic),
            (vec!["A", "Ssinh", "P", "L"], RelationKind::Harmonic),
        ],
        _ => return Err(Error::UnknownChain(name.to_string())),
    };
    Ok(chains
        .into_iter()
        .map(|(ids, relation)| ChainSpec {
            mean_ids: ids.into_iter().map(String::from).collect(),
            relation,
            grid: grid.clone(),
        })
        .collect())
}

pub fn chain_preset_names() -> &'static [&'static str] {
    &["ns2003", "ns2003-extended", "harmonic-upper", "harmonic-lower"]
}
