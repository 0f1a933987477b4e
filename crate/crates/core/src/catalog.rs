//! Built-in posets: the worked examples `fig1a` to `fig4` and a
//! few standard families (`chain_k`, `bool_k`, `mo_k`).
//!
//! Each entry carries expected verdicts and concrete facts; [`CatalogEntry::verify`]
//! re-evaluates all of them, so a mistranscribed diagram cannot go unnoticed.

use crate::constructions::horizontal_sum;
use crate::error::{PosetError, Result};
use crate::poset::FinitePoset;
use crate::properties::{relative_pseudocomplement, Property};
use crate::residuation::adjoint_product_candidates;

/// A checkable statement about a catalog poset, by element name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fact {
    Lower { of: Vec<&'static str>, expected: Vec<&'static str> },
    Upper { of: Vec<&'static str>, expected: Vec<&'static str> },
    Join { a: &'static str, b: &'static str, expected: Option<&'static str> },
    Meet { a: &'static str, b: &'static str, expected: Option<&'static str> },
    /// relative pseudocomplement `a*b`
    Rpc { a: &'static str, b: &'static str, expected: Option<&'static str> },
    /// values of `x ⊙ y` compatible with left adjointness for the partial `→`
    AdjointCandidates { x: &'static str, y: &'static str, expected: Vec<&'static str> },
}

impl Fact {
    pub fn holds(&self, p: &FinitePoset) -> Result<bool> {
        let opt = |e: Option<&str>| e.map(|n| p.element(n)).transpose();
        Ok(match self {
            Fact::Lower { of, expected } => p.lower_cone(&p.set_of(of)?) == p.set_of(expected)?,
            Fact::Upper { of, expected } => p.upper_cone(&p.set_of(of)?) == p.set_of(expected)?,
            Fact::Join { a, b, expected } => p.join(p.element(a)?, p.element(b)?) == opt(*expected)?,
            Fact::Meet { a, b, expected } => p.meet(p.element(a)?, p.element(b)?) == opt(*expected)?,
            Fact::Rpc { a, b, expected } => {
                relative_pseudocomplement(p, p.element(a)?, p.element(b)?) == opt(*expected)?
            }
            Fact::AdjointCandidates { x, y, expected } => {
                adjoint_product_candidates(p, p.element(x)?, p.element(y)?)? == p.set_of(expected)?
            }
        })
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub poset: FinitePoset,
    pub expected: Vec<(Property, bool)>,
    pub facts: Vec<Fact>,
}

impl CatalogEntry {
    /// Descriptions of every expectation or fact that does not re-verify.
    pub fn verify(&self) -> Vec<String> {
        let mut bad = Vec::new();
        for &(prop, want) in &self.expected {
            let got = prop.holds(&self.poset);
            if got != want {
                bad.push(format!("{}: {prop} expected {want}, got {got}", self.id));
            }
        }
        for fact in &self.facts {
            match fact.holds(&self.poset) {
                Ok(true) => {}
                Ok(false) => bad.push(format!("{}: {fact:?} does not hold", self.id)),
                Err(e) => bad.push(format!("{}: {fact:?}: {e}", self.id)),
            }
        }
        bad
    }
}

const EXAMPLES: [&str; 5] = ["fig1a", "fig1b", "fig2", "fig3", "fig4"];

/// Example ids followed by representative members of each family.
pub fn list() -> Vec<String> {
    let mut ids: Vec<String> = EXAMPLES.iter().map(|s| s.to_string()).collect();
    ids.extend(["chain_2", "chain_3", "bool_2", "bool_3", "mo_2", "mo_3"].map(String::from));
    ids
}

pub fn get(id: &str) -> Result<CatalogEntry> {
    let unknown = || PosetError::UnknownId(id.to_string());
    let entry = match id {
        "fig1a" => fig1a(),
        "fig1b" => fig1b(),
        "fig2" => fig2(),
        "fig3" => fig3(),
        "fig4" => fig4(),
        _ => {
            let (family, k) = id.rsplit_once('_').ok_or_else(unknown)?;
            let k: usize = k.parse().map_err(|_| unknown())?;
            match family {
                "chain" if k >= 2 => chain(k),
                "bool" if (1..=8).contains(&k) => boolean_algebra(k),
                "mo" if k >= 2 => mo(k),
                _ => return Err(unknown()),
            }
        }
    };
    entry.map(|mut e| {
        e.id = id.to_string();
        e
    })
}

fn entry(poset: FinitePoset, expected: Vec<(Property, bool)>, facts: Vec<Fact>) -> Result<CatalogEntry> {
    Ok(CatalogEntry { id: poset.name().to_string(), poset, expected, facts })
}

fn pairs<'a>(list: &[(&'a str, &'a str)]) -> Vec<(&'a str, &'a str)> {
    list.to_vec()
}

/// Swap pairs expanded to a total map: `x ↔ y` for each `(x, y)`.
fn swaps<'a>(list: &[(&'a str, &'a str)]) -> Vec<(&'a str, &'a str)> {
    list.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect()
}

const FIG1_PRIMES: [(&str, &str); 7] = [
    ("0", "1"),
    ("a", "a'"),
    ("b", "b'"),
    ("c", "c'"),
    ("d", "d'"),
    ("e", "e'"),
    ("f", "f'"),
];

fn fig1a_poset() -> Result<FinitePoset> {
    let elements = ["0", "a", "b", "c", "d", "e", "f", "f'", "e'", "d'", "c'", "b'", "a'", "1"];
    let covers = pairs(&[
        ("0", "a"), ("0", "b"), ("0", "c"), ("0", "d"),
        ("a", "e"), ("b", "e"),
        ("a", "f"), ("c", "f"),
        ("b", "f'"), ("d", "f'"),
        ("c", "e'"), ("d", "e'"),
        ("e", "d'"), ("e", "c'"),
        ("f", "b'"), ("f", "d'"),
        ("f'", "a'"), ("f'", "c'"),
        ("e'", "a'"), ("e'", "b'"),
        ("d'", "1"), ("c'", "1"), ("b'", "1"), ("a'", "1"),
    ]);
    FinitePoset::new("fig1a", &elements, &covers)?.with_unary_names(&swaps(&FIG1_PRIMES))
}

fn fig1b_poset() -> Result<FinitePoset> {
    let elements = ["0", "a", "b", "c", "d", "e", "e'", "d'", "c'", "b'", "a'", "1"];
    let covers = pairs(&[
        ("0", "a"), ("0", "b"), ("0", "c"), ("0", "d"),
        ("a", "e"), ("b", "e"),
        ("c", "e'"), ("d", "e'"),
        ("a", "b'"), ("c", "d'"), ("b", "a'"), ("d", "c'"),
        ("e", "d'"), ("e", "c'"),
        ("e'", "a'"), ("e'", "b'"),
        ("d'", "1"), ("c'", "1"), ("b'", "1"), ("a'", "1"),
    ]);
    FinitePoset::new("fig1b", &elements, &covers)?.with_unary_names(&swaps(&FIG1_PRIMES[..6]))
}

fn fig1a() -> Result<CatalogEntry> {
    entry(
        fig1a_poset()?,
        vec![
            (Property::Boolean, true),
            (Property::Lattice, false),
            (Property::Distributive, true),
            (Property::Complementation, true),
            (Property::PseudoBoolean, true),
            (Property::PseudoOrthomodular, true),
        ],
        vec![
            Fact::Lower { of: vec!["b'", "c'"], expected: vec!["0", "a", "d"] },
            Fact::Join { a: "c", b: "a", expected: Some("f") },
            Fact::Join { a: "c", b: "d", expected: Some("e'") },
            Fact::Join { a: "c", b: "0", expected: Some("c") },
            Fact::AdjointCandidates { x: "b'", y: "c'", expected: vec![] },
        ],
    )
}

fn fig1b() -> Result<CatalogEntry> {
    entry(
        fig1b_poset()?,
        vec![
            (Property::Boolean, true),
            (Property::Lattice, false),
            (Property::PseudoOrthomodular, true),
        ],
        vec![Fact::Join { a: "a", b: "c", expected: None }],
    )
}

fn fig2() -> Result<CatalogEntry> {
    let poset = FinitePoset::new(
        "fig2",
        &["0", "a", "b", "c", "d", "1"],
        &pairs(&[
            ("0", "a"), ("0", "b"),
            ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"),
            ("c", "1"), ("d", "1"),
        ]),
    )?
    .with_unary_names(&swaps(&[("0", "1"), ("a", "d"), ("b", "c")]))?;
    let mut facts = vec![
        Fact::Lower { of: vec!["c", "d"], expected: vec!["0", "a", "b"] },
        Fact::Upper { of: vec!["a", "d"], expected: vec!["d", "1"] },
        Fact::Upper { of: vec!["a", "b"], expected: vec!["c", "d", "1"] },
        Fact::Lower { of: vec!["d"], expected: vec!["0", "a", "b", "d"] },
        Fact::Lower { of: vec!["c"], expected: vec!["0", "a", "b", "c"] },
    ];
    for (a, row) in FIG2_ELEMENTS.iter().zip(FIG2_RPC_TABLE) {
        for (b, c) in FIG2_ELEMENTS.iter().zip(row) {
            facts.push(Fact::Rpc { a, b, expected: Some(c) });
        }
    }
    entry(
        poset,
        vec![
            (Property::Distributive, true),
            (Property::Modular, true),
            (Property::Lattice, false),
            (Property::AntitoneInvolution, true),
            (Property::Complementation, false),
            (Property::Boolean, false),
            (Property::RelativelyPseudocomplemented, true),
        ],
        facts,
    )
}

pub const FIG2_ELEMENTS: [&str; 6] = ["0", "a", "b", "c", "d", "1"];

/// `FIG2_RPC_TABLE[i][j] = x_i * x_j` over [`FIG2_ELEMENTS`].
pub const FIG2_RPC_TABLE: [[&str; 6]; 6] = [
    ["1", "1", "1", "1", "1", "1"],
    ["b", "1", "b", "1", "1", "1"],
    ["a", "a", "1", "1", "1", "1"],
    ["0", "a", "b", "1", "d", "1"],
    ["0", "a", "b", "c", "1", "1"],
    ["0", "a", "b", "c", "d", "1"],
];

fn fig3() -> Result<CatalogEntry> {
    let poset = FinitePoset::new(
        "fig3",
        &["0", "a", "b", "c", "d", "d'", "c'", "b'", "a'", "1"],
        &pairs(&[
            ("0", "a"), ("0", "b"), ("0", "c"), ("0", "d"),
            ("a", "d'"), ("a", "c'"), ("b", "d'"), ("b", "c'"),
            ("c", "b'"), ("c", "a'"), ("d", "b'"), ("d", "a'"),
            ("d'", "1"), ("c'", "1"), ("b'", "1"), ("a'", "1"),
        ]),
    )?
    .with_unary_names(&swaps(&FIG1_PRIMES[..5]))?;
    entry(
        poset,
        vec![
            (Property::Complementation, true),
            (Property::Orthogonal, true),
            (Property::Orthomodular, false),
            (Property::PseudoOrthomodular, false),
            (Property::RelativelyPseudocomplemented, false),
        ],
        vec![Fact::Join { a: "a", b: "c", expected: Some("1") }],
    )
}

/// `fig4` read directly off its Hasse diagram instead of built as a sum.
pub fn fig4_transcription() -> Result<FinitePoset> {
    let b = fig1b_poset()?;
    let mut elements: Vec<&str> = b.names()[..11].iter().map(String::as_str).collect();
    elements.extend(["f", "f'", "1"]);
    let mut covers: Vec<(&str, &str)> = b
        .covers()
        .into_iter()
        .map(|(x, y)| (b.name_of(x), b.name_of(y)))
        .collect();
    covers.extend([("0", "f"), ("f", "1"), ("0", "f'"), ("f'", "1")]);
    FinitePoset::new("fig4", &elements, &covers)?.with_unary_names(&swaps(&FIG1_PRIMES))
}

fn fig4() -> Result<CatalogEntry> {
    let block = boolean_algebra(2)?.poset.with_element_names(&["0", "f", "f'", "1"])?;
    let poset = horizontal_sum(&[fig1b_poset()?, block])?.renamed("fig4")?;
    entry(
        poset,
        vec![
            (Property::Complementation, true),
            (Property::PseudoOrthomodular, true),
            (Property::Modular, false),
            (Property::Distributive, false),
            (Property::Orthogonal, false),
        ],
        vec![
            Fact::Join { a: "b", b: "c", expected: None },
            Fact::Upper { of: vec!["b", "f"], expected: vec!["1"] },
            Fact::Lower { of: vec!["b", "c'"], expected: vec!["0", "b"] },
            Fact::Lower { of: vec!["f", "c'"], expected: vec!["0"] },
        ],
    )
}

fn chain(k: usize) -> Result<CatalogEntry> {
    let mut names = vec!["0".to_string()];
    names.extend((1..k - 1).map(|i| format!("c{i}")));
    names.push("1".to_string());
    let covers: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    let mut poset = FinitePoset::from_indices(&format!("chain_{k}"), names, &covers)?;
    if k <= 2 {
        poset = poset.with_unary_names(&[("0", "1"), ("1", "0")])?;
    }
    entry(
        poset,
        vec![
            (Property::Lattice, true),
            (Property::Modular, true),
            (Property::Distributive, true),
            (Property::RelativelyPseudocomplemented, true),
        ],
        vec![],
    )
}

/// Powerset of a `k`-set ordered by inclusion, with set complement.
/// Elements are named by their letters; `0` and `1` are the empty and full set.
fn boolean_algebra(k: usize) -> Result<CatalogEntry> {
    let n = 1usize << k;
    let name = |mask: usize| -> String {
        if mask == 0 {
            "0".into()
        } else if mask == n - 1 {
            "1".into()
        } else {
            (0..k).filter(|i| mask >> i & 1 == 1).map(|i| (b'a' + i as u8) as char).collect()
        }
    };
    // order by cardinality then mask
    let mut masks: Vec<usize> = (0..n).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    let pos: Vec<usize> = {
        let mut pos = vec![0; n];
        for (i, &m) in masks.iter().enumerate() {
            pos[m] = i;
        }
        pos
    };
    let names: Vec<String> = masks.iter().map(|&m| name(m)).collect();
    let covers: Vec<(usize, usize)> = masks
        .iter()
        .flat_map(|&m| (0..k).filter(move |i| m >> i & 1 == 0).map(move |i| (m, m | 1 << i)))
        .map(|(a, b)| (pos[a], pos[b]))
        .collect();
    let image = masks.iter().map(|&m| pos[(n - 1) ^ m]).collect();
    let poset = FinitePoset::from_indices(&format!("bool_{k}"), names, &covers)?
        .with_unary(crate::poset::UnaryMap::new(image))?;
    let expected = vec![
        (Property::Lattice, true),
        (Property::Boolean, true),
        (Property::PseudoBoolean, true),
        (Property::PseudoOrthomodular, true),
        (Property::RelativelyPseudocomplemented, true),
        (Property::Orthogonal, true),
        (Property::Orthomodular, true),
    ];
    entry(poset, expected, vec![])
}

/// Horizontal sum of `k` four-element Boolean algebras.
fn mo(k: usize) -> Result<CatalogEntry> {
    let blocks: Vec<FinitePoset> = (0..k)
        .map(|_| boolean_algebra(2).map(|e| e.poset))
        .collect::<Result<_>>()?;
    let poset = horizontal_sum(&blocks)?.renamed(&format!("mo_{k}"))?;
    entry(
        poset,
        vec![
            (Property::Lattice, true),
            (Property::Modular, true),
            (Property::Distributive, false),
            (Property::Complementation, true),
            (Property::PseudoOrthomodular, true),
            (Property::Orthogonal, true),
            (Property::Orthomodular, true),
        ],
        vec![],
    )
}
