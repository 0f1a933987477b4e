//! Exhaustive enumeration of small bounded posets (with unary maps) up to
//! isomorphism, property-filtered search, and sweeps that check every
//! quantified claim about the poset classes on all enumerated structures.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write;
use std::str::FromStr;

use rayon::prelude::*;

use crate::catalog;
use crate::constructions::horizontal_sum;
use crate::error::{PosetError, Result};
use crate::format;
use crate::iso::{automorphisms, canonical_labeling, CanonicalForm};
use crate::poset::{FinitePoset, UnaryMap};
use crate::properties::{self, Law, Property};
use crate::residuation::{
    build_boolean, build_pom, build_rpc, check_divisibility_characterization, check_modular_characterization,
};
use crate::set::ElementSet;

pub const DEFAULT_CAP: usize = 8;

/// Environment variable overriding the enumeration cap.
pub const CAP_ENV: &str = "POSET_MAX_SIZE";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub cap: usize,
}

impl SearchConfig {
    /// Cap from `POSET_MAX_SIZE` when set to a number, else [`DEFAULT_CAP`].
    pub fn from_env() -> Self {
        let cap = std::env::var(CAP_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_CAP);
        SearchConfig { cap }
    }

    fn check(&self, max_size: usize) -> Result<()> {
        if max_size > self.cap {
            Err(PosetError::CapExceeded { requested: max_size, cap: self.cap })
        } else {
            Ok(())
        }
    }
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { cap: DEFAULT_CAP }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnaryMode {
    None,
    Involution,
    AntitoneInvolution,
    Complementation,
}

impl UnaryMode {
    pub fn name(self) -> &'static str {
        match self {
            UnaryMode::None => "none",
            UnaryMode::Involution => "involution",
            UnaryMode::AntitoneInvolution => "antitone-involution",
            UnaryMode::Complementation => "complementation",
        }
    }
}

impl FromStr for UnaryMode {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('_', "-").as_str() {
            "none" => Ok(UnaryMode::None),
            "involution" => Ok(UnaryMode::Involution),
            "antitone-involution" => Ok(UnaryMode::AntitoneInvolution),
            "complementation" => Ok(UnaryMode::Complementation),
            other => Err(PosetError::InvalidQuery(format!("unknown unary mode `{other}`"))),
        }
    }
}

fn interior_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("e{i}")
    }
}

/// Unlabelled posets on `m` elements, one per isomorphism class, each
/// relabelled into its canonical order. Built by adding a new maximal
/// element above every down-set of every class of size `m - 1`.
fn interior_classes(max_m: usize) -> Vec<Vec<FinitePoset>> {
    let anon = |m: usize| (0..m).map(|i| format!("e{i}")).collect::<Vec<_>>();
    let mut levels = vec![vec![FinitePoset::from_indices("q", anon(0), &[]).expect("empty poset")]];
    for m in 1..=max_m {
        let prev = &levels[m - 1];
        let found: Vec<(CanonicalForm, FinitePoset)> = prev
            .par_iter()
            .flat_map_iter(|q| {
                let k = q.len();
                (0u64..1 << k)
                    .map(|mask| ElementSet::from_indices((0..k).filter(|&i| mask >> i & 1 == 1)))
                    .filter(|d| d.iter().all(|x| q.down_set(x).is_subset(d)))
                    .map(|d| {
                        let mut pairs: Vec<(usize, usize)> =
                            (0..k).flat_map(|x| q.up_set(x).iter().map(move |y| (x, y))).collect();
                        pairs.extend(d.iter().map(|x| (x, k)));
                        let cand =
                            FinitePoset::from_indices("q", anon(k + 1), &pairs).expect("acyclic by construction");
                        let (form, order) = canonical_labeling(&cand);
                        (form, relabel(&cand, &order, anon(k + 1)))
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        let mut unique: HashMap<CanonicalForm, FinitePoset> = HashMap::new();
        for (form, p) in found {
            unique.entry(form).or_insert(p);
        }
        let mut level: Vec<(CanonicalForm, FinitePoset)> = unique.into_iter().collect();
        level.sort_by(|a, b| a.0.cmp(&b.0));
        levels.push(level.into_iter().map(|(_, p)| p).collect());
    }
    levels
}

fn relabel(p: &FinitePoset, order: &[usize], names: Vec<String>) -> FinitePoset {
    let n = p.len();
    let mut pos = vec![0; n];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| p.up_set(x).iter().map(move |y| (x, y)).collect::<Vec<_>>())
        .map(|(x, y)| (pos[x], pos[y]))
        .collect();
    FinitePoset::from_indices(p.name(), names, &pairs).expect("relabelling preserves validity")
}

fn bounded_from_interior(q: &FinitePoset, name: &str) -> FinitePoset {
    let m = q.len();
    let mut names = vec!["0".to_string()];
    names.extend((0..m).map(interior_name));
    names.push("1".to_string());
    let mut pairs: Vec<(usize, usize)> = (0..m + 2).map(|x| (0, x)).chain((0..m + 2).map(|x| (x, m + 1))).collect();
    for x in 0..m {
        for y in q.up_set(x).iter() {
            pairs.push((x + 1, y + 1));
        }
    }
    FinitePoset::from_indices(name, names, &pairs).expect("bounded extension is a poset")
}

/// Every bounded order with 2 to `max_size` elements, one per isomorphism
/// class, in deterministic order. Elements are `0`, `a`, `b`, ..., `1`.
pub fn order_classes(max_size: usize) -> Vec<FinitePoset> {
    if max_size < 2 {
        return Vec::new();
    }
    let levels = interior_classes(max_size - 2);
    levels
        .iter()
        .enumerate()
        .flat_map(|(m, level)| {
            level.iter().enumerate().map(move |(k, q)| bounded_from_interior(q, &format!("n{}_{}", m + 2, k)))
        })
        .collect()
}

/// Involutions of the requested mode, one per orbit under the automorphism group.
pub fn unary_maps(p: &FinitePoset, mode: UnaryMode) -> Vec<UnaryMap> {
    if mode == UnaryMode::None {
        return Vec::new();
    }
    let n = p.len();
    let bounds = p.bounds().ok();
    let mut all = Vec::new();
    let mut image = vec![usize::MAX; n];
    collect_involutions(p, mode, bounds, 0, &mut image, &mut all);
    let autos = automorphisms(p);
    all.into_iter()
        .filter(|u| {
            autos.iter().all(|sigma| {
                let mut conj = vec![0; n];
                for x in 0..n {
                    conj[sigma[x]] = sigma[u[x]];
                }
                *u <= conj
            })
        })
        .map(UnaryMap::new)
        .collect()
}

fn pair_ok(
    p: &FinitePoset,
    mode: UnaryMode,
    bounds: Option<(usize, usize)>,
    image: &[usize],
    x: usize,
    y: usize,
) -> bool {
    if mode == UnaryMode::Complementation {
        let Some((b, t)) = bounds else { return false };
        if p.lower2(x, y) != ElementSet::singleton(b) || p.upper2(x, y) != ElementSet::singleton(t) {
            return false;
        }
    }
    if mode != UnaryMode::Involution {
        for z in (0..image.len()).filter(|&z| image[z] != usize::MAX) {
            for w in [x, y] {
                let wc = image[w];
                if p.leq(w, z) && !p.leq(image[z], wc) || p.leq(z, w) && !p.leq(wc, image[z]) {
                    return false;
                }
            }
        }
    }
    true
}

fn collect_involutions(
    p: &FinitePoset,
    mode: UnaryMode,
    bounds: Option<(usize, usize)>,
    x: usize,
    image: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let n = p.len();
    if x == n {
        out.push(image.clone());
        return;
    }
    if image[x] != usize::MAX {
        collect_involutions(p, mode, bounds, x + 1, image, out);
        return;
    }
    for y in x..n {
        if image[y] != usize::MAX {
            continue;
        }
        image[x] = y;
        image[y] = x;
        if pair_ok(p, mode, bounds, image, x, y) {
            collect_involutions(p, mode, bounds, x + 1, image, out);
        }
        image[x] = usize::MAX;
        image[y] = usize::MAX;
    }
}

/// All bounded posets of size `2..=max_size` up to isomorphism, each paired
/// with every unary map of `mode` up to automorphism (mode `None`: no map).
pub fn enumerate(max_size: usize, mode: UnaryMode, config: &SearchConfig) -> Result<Vec<FinitePoset>> {
    config.check(max_size)?;
    let orders = order_classes(max_size);
    if mode == UnaryMode::None {
        return Ok(orders);
    }
    Ok(orders
        .par_iter()
        .map(|p| {
            unary_maps(p, mode)
                .into_iter()
                .enumerate()
                .map(|(j, u)| {
                    let name = format!("{}_u{j}", p.name());
                    p.clone().renamed(&name).and_then(|q| q.with_unary(u)).expect("valid unary map")
                })
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchQuery {
    pub max_size: usize,
    pub require: Vec<Property>,
    pub forbid: Vec<Property>,
    pub unary_mode: UnaryMode,
    pub limit: Option<usize>,
}

impl SearchQuery {
    pub fn new(max_size: usize, unary_mode: UnaryMode) -> Self {
        SearchQuery { max_size, require: Vec::new(), forbid: Vec::new(), unary_mode, limit: None }
    }

    /// Parses property names (`UnknownProperty` on a bad one).
    pub fn properties<S: AsRef<str>>(names: &[S]) -> Result<Vec<Property>> {
        names.iter().map(|n| n.as_ref().parse()).collect()
    }

    fn validate(&self) -> Result<()> {
        if self.max_size < 2 {
            return Err(PosetError::InvalidQuery("max_size must be at least 2".into()));
        }
        if let Some(p) = self.require.iter().find(|p| self.forbid.contains(p)) {
            return Err(PosetError::InvalidQuery(format!("`{p}` is both required and forbidden")));
        }
        Ok(())
    }
}

/// Enumerated structures meeting every required property and no forbidden
/// one; unmet preconditions count as "does not hold".
pub fn find(query: &SearchQuery, config: &SearchConfig) -> Result<Vec<FinitePoset>> {
    query.validate()?;
    let all = enumerate(query.max_size, query.unary_mode, config)?;
    let keep: Vec<bool> = all
        .par_iter()
        .map(|p| query.require.iter().all(|r| r.holds(p)) && !query.forbid.iter().any(|f| f.holds(p)))
        .collect();
    Ok(all.into_iter().zip(keep).filter_map(|(p, k)| k.then_some(p)).take(query.limit.unwrap_or(usize::MAX)).collect())
}

/// A claim that failed on a concrete structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub claim: String,
    pub poset: FinitePoset,
    pub detail: String,
}

impl Violation {
    /// Poset file with the claim and detail as leading comments.
    pub fn to_file_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# claim: {}", self.claim).unwrap();
        for line in self.detail.lines() {
            writeln!(out, "# {line}").unwrap();
        }
        out.push_str(&format::render(&self.poset));
        out
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClaimReport {
    pub max_size: usize,
    pub structures: usize,
    /// claim -> number of structures on which its premise held and it was checked
    pub checks: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
}

impl ClaimReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn checked(&self, claim: &str) -> usize {
        self.checks.get(claim).copied().unwrap_or(0)
    }

    fn absorb(&mut self, outcomes: Vec<ClaimOutcome>) {
        for o in outcomes {
            *self.checks.entry(o.claim.to_string()).or_default() += 1;
            if let Some(v) = o.violation {
                self.violations.push(v);
            }
        }
    }
}

struct ClaimOutcome {
    claim: &'static str,
    violation: Option<Violation>,
}

struct Claims<'a> {
    p: &'a FinitePoset,
    out: Vec<ClaimOutcome>,
}

impl<'a> Claims<'a> {
    fn new(p: &'a FinitePoset) -> Self {
        Claims { p, out: Vec::new() }
    }

    fn record(&mut self, claim: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let violation = (!ok).then(|| Violation { claim: claim.to_string(), poset: self.p.clone(), detail: detail() });
        self.out.push(ClaimOutcome { claim, violation });
    }

    fn holds(&self, prop: Property) -> bool {
        prop.holds(self.p)
    }

    /// Claims about the order alone.
    fn order_claims(&mut self) {
        let p = self.p;
        let modular = properties::is_modular(p);
        let distributive = properties::is_distributive(p);
        self.record("modular_forms_agree", modular.forms_agree("modular_lower", "modular_upper"), || {
            format!("{modular:?}")
        });
        self.record(
            "distributive_forms_agree",
            distributive.forms_agree("distributive_lower", "distributive_upper"),
            || format!("{distributive:?}"),
        );
        if distributive.holds {
            self.record("distributive_implies_modular", modular.holds, || format!("{modular:?}"));
        }
        let rpc = properties::is_relatively_pseudocomplemented(p);
        if rpc.holds && !p.is_empty() {
            self.record("rpc_has_top", p.top().is_some(), String::new);
        }
        if rpc.holds && p.is_bounded() {
            let result = build_rpc(p).map(|pair| pair.verify_axioms());
            let ok = result.as_ref().is_ok_and(|r| r.residuated() && r.divisibility.holds);
            self.record("rpc_residuation", ok, || format!("{result:?}"));
        }
    }

    /// Claims involving the unary map.
    fn unary_claims(&mut self) {
        let p = self.p;
        if p.unary().is_none() || !p.is_bounded() {
            return;
        }
        let ai = properties::is_antitone_involution(p).expect("unary present").holds;
        if !ai {
            return;
        }
        let dm = properties::de_morgan(p);
        self.record("de_morgan", dm.as_ref().is_ok_and(|r| r.holds), || format!("{dm:?}"));
        let pb = properties::is_pseudo_boolean(p).expect("bounded with unary");
        let pom = properties::is_pseudo_orthomodular(p).expect("bounded with unary");
        self.record(
            "pseudo_boolean_forms_agree",
            pb.forms_agree(Law::PseudoBooleanLower.name(), Law::PseudoBooleanUpper.name()),
            || format!("{pb:?}"),
        );
        self.record(
            "pseudo_orthomodular_forms_agree",
            pom.forms_agree(Law::PseudoOrthomodularLower.name(), Law::PseudoOrthomodularUpper.name()),
            || format!("{pom:?}"),
        );
        for (claim, pair) in
            [("boolean_pair_double_negation", build_boolean(p)), ("pom_pair_double_negation", build_pom(p))]
        {
            let r = pair.and_then(|pair| pair.verify_lemma1());
            self.record(claim, r.as_ref().is_ok_and(|r| r.holds), || format!("{r:?}"));
        }

        let complemented = self.holds(Property::Complementation);
        if !complemented {
            return;
        }
        let weak = properties::weak_pseudo_orthomodular(p);
        self.record("weak_pseudo_orthomodular", weak.as_ref().is_ok_and(|r| r.holds), || format!("{weak:?}"));
        let boolean = self.holds(Property::Boolean);
        if boolean {
            self.record("boolean_implies_pseudo_boolean", pb.holds, || format!("{pb:?}"));
        }
        if pb.holds {
            self.record("pseudo_boolean_implies_pseudo_orthomodular", pom.holds, || format!("{pom:?}"));
        }
        let orthogonal = self.holds(Property::Orthogonal);
        let modular = self.holds(Property::Modular);
        if orthogonal && (pom.holds || modular) {
            let om = properties::is_orthomodular(p);
            let ok = om.as_ref().is_ok_and(|r| r.holds);
            if pom.holds {
                self.record("orthogonal_pseudo_orthomodular_implies_orthomodular", ok, || format!("{om:?}"));
            }
            if modular {
                self.record("orthogonal_modular_implies_orthomodular", ok, || format!("{om:?}"));
            }
        }
        if boolean {
            let r = build_boolean(p).map(|pair| pair.verify_axioms());
            let ok = r.as_ref().is_ok_and(|r| {
                r.residuated() && r.divisibility.holds && r.double_negation.as_ref().is_some_and(|d| d.holds)
            });
            self.record("boolean_residuation", ok, || format!("{r:?}"));
        }
        if pom.holds {
            let r = build_pom(p).map(|pair| pair.verify_axioms());
            let ok = r.as_ref().is_ok_and(|r| r.left_residuated());
            self.record("pom_left_residuation", ok, || format!("{r:?}"));
            let c = check_divisibility_characterization(p);
            self.record("divisibility_characterization", c.as_ref().is_ok_and(|c| c.agree()), || format!("{c:?}"));
        }
        if modular {
            let c = check_modular_characterization(p);
            self.record("modular_characterization", c.as_ref().is_ok_and(|c| c.agree()), || format!("{c:?}"));
        }
    }
}

fn structure_claims(p: &FinitePoset, order: bool, unary: bool) -> Vec<ClaimOutcome> {
    let mut c = Claims::new(p);
    if order {
        c.order_claims();
    }
    if unary {
        c.unary_claims();
    }
    c.out
}

/// Largest block size used for horizontal-sum claims.
const SUM_BLOCK_CAP: usize = 6;

fn sum_claims(a: &FinitePoset, b: &FinitePoset) -> Vec<ClaimOutcome> {
    let sum = match horizontal_sum(&[a.clone(), b.clone()]) {
        Ok(s) => s,
        Err(e) => {
            return vec![ClaimOutcome {
                claim: "horizontal_sum_defined",
                violation: Some(Violation {
                    claim: "horizontal_sum_defined".into(),
                    poset: a.clone(),
                    detail: format!("with block {}: {e}", b.name()),
                }),
            }]
        }
    };
    let mut c = Claims::new(&sum);
    let both = |prop: Property| prop.holds(a) && prop.holds(b);
    let ai = both(Property::AntitoneInvolution);
    c.record("horizontal_sum_antitone_involution", Property::AntitoneInvolution.holds(&sum) == ai, || {
        format!("blocks {} and {}", a.name(), b.name())
    });
    let comp = both(Property::Complementation);
    c.record("horizontal_sum_complementation", Property::Complementation.holds(&sum) == comp, || {
        format!("blocks {} and {}", a.name(), b.name())
    });
    if both(Property::PseudoOrthomodular) {
        c.record("horizontal_sum_pseudo_orthomodular", Property::PseudoOrthomodular.holds(&sum), || {
            format!("blocks {} and {}", a.name(), b.name())
        });
    }
    c.out
}

/// Checks every claim on all structures up to `max_size`, plus horizontal
/// sums of pairs of enumerated blocks of size `3..=min(max_size, 6)`.
pub fn sweep_claims(max_size: usize, config: &SearchConfig) -> Result<ClaimReport> {
    let orders = enumerate(max_size, UnaryMode::None, config)?;
    let structures = enumerate(max_size, UnaryMode::Involution, config)?;
    let mut report = ClaimReport { max_size, structures: orders.len() + structures.len(), ..Default::default() };
    for outcomes in orders.par_iter().map(|p| structure_claims(p, true, false)).collect::<Vec<_>>() {
        report.absorb(outcomes);
    }
    for outcomes in structures.par_iter().map(|p| structure_claims(p, false, true)).collect::<Vec<_>>() {
        report.absorb(outcomes);
    }
    let blocks: Vec<&FinitePoset> = structures
        .iter()
        .filter(|p| p.len() > 2 && p.len() <= SUM_BLOCK_CAP)
        .filter(|p| {
            let (b, t) = p.bounds().expect("bounded");
            let u = p.unary().expect("unary");
            u.apply(b) == t && u.apply(t) == b
        })
        .collect();
    let pairs: Vec<(usize, usize)> = (0..blocks.len()).flat_map(|i| (i..blocks.len()).map(move |j| (i, j))).collect();
    for outcomes in pairs.par_iter().map(|&(i, j)| sum_claims(blocks[i], blocks[j])).collect::<Vec<_>>() {
        report.absorb(outcomes);
    }
    Ok(report)
}

/// The same claims on every catalog entry.
pub fn sweep_catalog() -> Result<ClaimReport> {
    let entries = catalog::list().into_iter().map(|id| catalog::get(&id)).collect::<Result<Vec<_>>>()?;
    let mut report = ClaimReport { structures: entries.len(), ..Default::default() };
    for e in &entries {
        report.absorb(structure_claims(&e.poset, true, true));
    }
    Ok(report)
}
