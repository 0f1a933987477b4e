//! Operator pairs `M, R : P² → 2^P` and the operator-residuation axioms.
//!
//! Tables are filled eagerly; every verification quantifies over all pairs
//! or triples and keeps the lexicographically first failing tuple.

use crate::error::{PosetError, Result};
use crate::poset::{FinitePoset, UnaryMap};
use crate::properties::{self, is_antitone_involution, is_complementation, is_modular, is_pseudo_orthomodular};
use crate::report::{PropertyReport, Witness};
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    /// `M(x,y) = L(x,y)`, `R(x,y) = L(x*y)`
    Rpc,
    /// `M(x,y) = L(x,y)`, `R(x,y) = L(U(x',y))`
    Boolean,
    /// `M(x,y) = L(U(x,y'),y)`, `R(x,y) = L(U(L(x,y),x'))`
    Pom,
    Custom,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::Rpc => "rpc",
            Construction::Boolean => "boolean",
            Construction::Pom => "pom",
            Construction::Custom => "custom",
        }
    }
}

impl std::str::FromStr for Construction {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rpc" => Ok(Construction::Rpc),
            "boolean" => Ok(Construction::Boolean),
            "pom" => Ok(Construction::Pom),
            other => Err(PosetError::InvalidQuery(format!("unknown construction `{other}`"))),
        }
    }
}

/// Tabulated `M` and `R` over a poset, with the unary operation that
/// axiom `R(x,0) = L(x')` refers to.
#[derive(Clone, Debug)]
pub struct OperatorPair<'a> {
    poset: &'a FinitePoset,
    m: Vec<ElementSet>,
    r: Vec<ElementSet>,
    unary: UnaryMap,
    construction: Construction,
}

impl<'a> OperatorPair<'a> {
    /// Wraps arbitrary tables, indexed `table[x * n + y]`.
    pub fn custom(poset: &'a FinitePoset, m: Vec<ElementSet>, r: Vec<ElementSet>, unary: UnaryMap) -> Result<Self> {
        let n = poset.len();
        if m.len() != n * n || r.len() != n * n {
            return Err(PosetError::PreconditionFailed(format!("operator tables must have {} entries", n * n)));
        }
        if unary.len() != n {
            return Err(PosetError::NonTotalUnary(format!("{} images for {n} elements", unary.len())));
        }
        poset.bounds()?;
        Ok(OperatorPair { poset, m, r, unary, construction: Construction::Custom })
    }

    fn tabulate(
        poset: &'a FinitePoset,
        unary: UnaryMap,
        construction: Construction,
        m: impl Fn(usize, usize) -> ElementSet,
        r: impl Fn(usize, usize) -> ElementSet,
    ) -> Self {
        let n = poset.len();
        let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
        OperatorPair {
            poset,
            m: pairs().map(|(x, y)| m(x, y)).collect(),
            r: pairs().map(|(x, y)| r(x, y)).collect(),
            unary,
            construction,
        }
    }

    pub fn poset(&self) -> &'a FinitePoset {
        self.poset
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn unary(&self) -> &UnaryMap {
        &self.unary
    }

    #[inline]
    pub fn m(&self, x: usize, y: usize) -> ElementSet {
        self.m[x * self.poset.len() + y]
    }

    #[inline]
    pub fn r(&self, x: usize, y: usize) -> ElementSet {
        self.r[x * self.poset.len() + y]
    }

    /// `M(A,B) = ⋃_{(x,y) ∈ A×B} M(x,y)`.
    pub fn m_sets(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        union_over(a, b, |x, y| self.m(x, y))
    }

    /// `R(A,B) = ⋃_{(x,y) ∈ A×B} R(x,y)`.
    pub fn r_sets(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        union_over(a, b, |x, y| self.r(x, y))
    }

    /// Evaluates one axiom at a tuple; `None` when it holds there (or is vacuous).
    pub fn evaluate(&self, axiom: Axiom, args: &[usize]) -> Option<Witness> {
        assert_eq!(args.len(), axiom.arity());
        let p = self.poset;
        let (bottom, top) = p.bounds().expect("operator pairs are built on bounded posets");
        let fail = |lhs: ElementSet, rhs: ElementSet| {
            Some(Witness { law: axiom.name().to_string(), elements: args.to_vec(), lhs, rhs })
        };
        let universe = p.universe();
        match axiom {
            Axiom::Unit => {
                let x = args[0];
                let lx = p.down_set(x);
                if self.m(x, top) != lx {
                    fail(self.m(x, top), lx)
                } else if self.m(top, x) != lx {
                    fail(self.m(top, x), lx)
                } else {
                    None
                }
            }
            Axiom::Order => {
                let (x, y) = (args[0], args[1]);
                let full = self.r(x, y) == universe;
                match (full, p.leq(x, y)) {
                    (true, true) | (false, false) => None,
                    (false, true) => fail(self.r(x, y), universe),
                    (true, false) => fail(p.down_set(x), p.down_set(y)),
                }
            }
            Axiom::Adjointness => {
                let (x, y, z) = (args[0], args[1], args[2]);
                let (mxy, lz) = (self.m(x, y), p.down_set(z));
                let (lx, ryz) = (p.down_set(x), self.r(y, z));
                match (mxy.is_subset(&lz), lx.is_subset(&ryz)) {
                    (true, false) => fail(lx, ryz),
                    (false, true) => fail(mxy, lz),
                    _ => None,
                }
            }
            Axiom::Negation => {
                let x = args[0];
                let expected = p.down_set(self.unary.apply(x));
                (self.r(x, bottom) != expected).then(|| fail(self.r(x, bottom), expected)).flatten()
            }
            Axiom::Commutativity => {
                let (x, y) = (args[0], args[1]);
                (self.m(x, y) != self.m(y, x)).then(|| fail(self.m(x, y), self.m(y, x))).flatten()
            }
            Axiom::Divisibility => {
                let (x, y) = (args[0], args[1]);
                let lhs = self.m_sets(&self.r(x, y), &ElementSet::singleton(x));
                let rhs = p.lower2(x, y);
                (lhs != rhs).then(|| fail(lhs, rhs)).flatten()
            }
            Axiom::DoubleNegation => {
                let x = args[0];
                let lhs = self.r_sets(&self.r(x, bottom), &ElementSet::singleton(bottom));
                (lhs != universe).then(|| fail(lhs, universe)).flatten()
            }
        }
    }

    fn quantify(&self, axiom: Axiom) -> PropertyReport {
        let n = self.poset.len();
        let witness = match axiom.arity() {
            1 => (0..n).find_map(|x| self.evaluate(axiom, &[x])),
            2 => (0..n).find_map(|x| (0..n).find_map(|y| self.evaluate(axiom, &[x, y]))),
            // (z, y, x) outer to inner
            _ => (0..n).find_map(|z| (0..n).find_map(|y| (0..n).find_map(|x| self.evaluate(axiom, &[x, y, z])))),
        };
        PropertyReport::single(axiom.name(), witness)
    }

    /// `M(R(x,y),x) = L(x,y)` for all `x, y`.
    pub fn verify_divisibility(&self) -> PropertyReport {
        self.quantify(Axiom::Divisibility)
    }

    /// `R(R(x,0),0) = P` for all `x`. Requires the pair's unary map to be an
    /// antitone involution and `R(x,0) = L(x')` to hold.
    pub fn verify_lemma1(&self) -> Result<PropertyReport> {
        let with_unary = self.poset.clone().with_unary(self.unary.clone())?;
        let ai = is_antitone_involution(&with_unary)?;
        if !ai.holds {
            return Err(PosetError::PreconditionFailed("unary map is not an antitone involution".into()));
        }
        if !self.quantify(Axiom::Negation).holds {
            return Err(PosetError::PreconditionFailed("R(x,0) = L(x') does not hold".into()));
        }
        Ok(self.quantify(Axiom::DoubleNegation))
    }

    /// Unit, order, adjointness and negation axioms, commutativity of `M`, divisibility, and the double
    /// negation identity when its preconditions are met.
    pub fn verify_axioms(&self) -> AxiomReport {
        AxiomReport {
            construction: self.construction,
            unit: self.quantify(Axiom::Unit),
            order: self.quantify(Axiom::Order),
            adjointness: self.quantify(Axiom::Adjointness),
            negation: self.quantify(Axiom::Negation),
            commutativity: self.quantify(Axiom::Commutativity),
            divisibility: self.verify_divisibility(),
            double_negation: self.verify_lemma1().ok(),
        }
    }
}

fn union_over(a: &ElementSet, b: &ElementSet, f: impl Fn(usize, usize) -> ElementSet) -> ElementSet {
    let mut out = ElementSet::empty();
    for x in a {
        for y in b {
            out.union_with(&f(x, y));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `M(x,1) = M(1,x) = L(x)`
    Unit,
    /// `R(x,y) = P ⟺ x ≤ y`
    Order,
    /// `M(x,y) ⊆ L(z) ⟺ L(x) ⊆ R(y,z)`, arguments `(x, y, z)`
    Adjointness,
    /// `R(x,0) = L(x')`
    Negation,
    /// `M(x,y) = M(y,x)`
    Commutativity,
    /// `M(R(x,y),x) = L(x,y)`
    Divisibility,
    /// `R(R(x,0),0) = P`
    DoubleNegation,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Unit => "unit",
            Axiom::Order => "order",
            Axiom::Adjointness => "adjointness",
            Axiom::Negation => "negation",
            Axiom::Commutativity => "commutativity",
            Axiom::Divisibility => "divisibility",
            Axiom::DoubleNegation => "double_negation",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Axiom::Unit | Axiom::Negation | Axiom::DoubleNegation => 1,
            Axiom::Adjointness => 3,
            _ => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub construction: Construction,
    pub unit: PropertyReport,
    pub order: PropertyReport,
    pub adjointness: PropertyReport,
    pub negation: PropertyReport,
    pub commutativity: PropertyReport,
    pub divisibility: PropertyReport,
    /// `None` when the unary map is not an antitone involution or `R(x,0) = L(x')` fails.
    pub double_negation: Option<PropertyReport>,
}

impl AxiomReport {
    /// Unit, order, adjointness and negation: an operator left residuated poset.
    pub fn left_residuated(&self) -> bool {
        self.unit.holds && self.order.holds && self.adjointness.holds && self.negation.holds
    }

    /// Left residuated with commutative `M`.
    pub fn residuated(&self) -> bool {
        self.left_residuated() && self.commutativity.holds
    }

    pub fn axioms(&self) -> [&PropertyReport; 4] {
        [&self.unit, &self.order, &self.adjointness, &self.negation]
    }
}

/// `M(x,y) = L(x,y)`, `R(x,y) = L(x*y)`, with `x* = x*0` as the unary map.
pub fn build_rpc(p: &FinitePoset) -> Result<OperatorPair<'_>> {
    p.bounds()?;
    let table = properties::relative_pseudocomplement_table(p);
    let n = p.len();
    for (a, row) in table.iter().enumerate() {
        if let Some(b) = row.iter().position(Option::is_none) {
            return Err(PosetError::PreconditionFailed(format!(
                "{} has no relative pseudocomplement with respect to {}",
                p.name_of(a),
                p.name_of(b)
            )));
        }
    }
    let rpc = |a: usize, b: usize| table[a][b].expect("checked above");
    let bottom = p.bottom().expect("bounded");
    let pseudo = UnaryMap::new((0..n).map(|x| rpc(x, bottom)).collect());
    Ok(OperatorPair::tabulate(p, pseudo, Construction::Rpc, |x, y| p.lower2(x, y), |x, y| p.down_set(rpc(x, y))))
}

/// `M(x,y) = L(x,y)`, `R(x,y) = L(U(x',y))`. Accepts any bounded poset with a unary map.
pub fn build_boolean(p: &FinitePoset) -> Result<OperatorPair<'_>> {
    p.bounds()?;
    let u = p.require_unary()?.clone();
    Ok(OperatorPair::tabulate(
        p,
        u.clone(),
        Construction::Boolean,
        |x, y| p.lower2(x, y),
        |x, y| p.lower_cone(&p.upper2(u.apply(x), y)),
    ))
}

/// `M(x,y) = L(U(x,y'),y)`, `R(x,y) = L(U(L(x,y),x'))`. Accepts any bounded poset with a unary map.
pub fn build_pom(p: &FinitePoset) -> Result<OperatorPair<'_>> {
    p.bounds()?;
    let u = p.require_unary()?.clone();
    Ok(OperatorPair::tabulate(
        p,
        u.clone(),
        Construction::Pom,
        |x, y| {
            let mut s = p.upper2(x, u.apply(y));
            s.insert(y);
            p.lower_cone(&s)
        },
        |x, y| {
            let mut s = p.lower2(x, y);
            s.insert(u.apply(x));
            p.lower_cone(&p.upper_cone(&s))
        },
    ))
}

pub fn build(p: &FinitePoset, construction: Construction) -> Result<OperatorPair<'_>> {
    match construction {
        Construction::Rpc => build_rpc(p),
        Construction::Boolean => build_boolean(p),
        Construction::Pom => build_pom(p),
        Construction::Custom => Err(PosetError::InvalidQuery("custom pairs are built from tables".into())),
    }
}

/// An equivalence check: the identity's verdict next to the class it characterizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterizationReport {
    pub identity: PropertyReport,
    pub reference: PropertyReport,
}

impl CharacterizationReport {
    pub fn agree(&self) -> bool {
        self.identity.holds == self.reference.holds
    }
}

/// Both sides of the modular characterization inclusion at `(x, y)`:
/// `L(⋂_{z∈L(x,y)} (U(z,y') ∪ {y}))` and `⋃_{z∈L(x,y)} L(U(z,y') ∪ {y})`.
pub fn modular_characterization_sides(p: &FinitePoset, x: usize, y: usize) -> Result<(ElementSet, ElementSet)> {
    let yc = p.require_unary()?.apply(y);
    let mut meet = p.universe();
    let mut join = ElementSet::empty();
    for z in &p.lower2(x, y) {
        let mut s = p.upper2(z, yc);
        s.insert(y);
        meet.intersect_with(&s);
        join.union_with(&p.lower_cone(&s));
    }
    Ok((p.lower_cone(&meet), join))
}

/// For a modular complemented poset: the inclusion holds for all pairs
/// exactly when the poset is pseudo-orthomodular.
pub fn check_modular_characterization(p: &FinitePoset) -> Result<CharacterizationReport> {
    if !is_modular(p).holds {
        return Err(PosetError::PreconditionFailed("poset is not modular".into()));
    }
    if !is_complementation(p)?.holds {
        return Err(PosetError::PreconditionFailed("unary map is not a complementation".into()));
    }
    let n = p.len();
    let mut witness = None;
    'outer: for x in 0..n {
        for y in 0..n {
            let (lhs, rhs) = modular_characterization_sides(p, x, y)?;
            if !lhs.is_subset(&rhs) {
                witness = Some(Witness { law: "modular_characterization".into(), elements: vec![x, y], lhs, rhs });
                break 'outer;
            }
        }
    }
    Ok(CharacterizationReport {
        identity: PropertyReport::single("modular_characterization", witness),
        reference: is_pseudo_orthomodular(p)?,
    })
}

/// Both sides of `⋃_{z∈R(x,y)} L(U(z,x'),x) = L(U(R(x,y),x'),x)` for the given pair.
pub fn divisibility_characterization_sides(pair: &OperatorPair<'_>, x: usize, y: usize) -> (ElementSet, ElementSet) {
    let p = pair.poset();
    let xc = pair.unary().apply(x);
    let rxy = pair.r(x, y);
    let mut lhs = ElementSet::empty();
    for z in &rxy {
        let mut s = p.upper2(z, xc);
        s.insert(x);
        lhs.union_with(&p.lower_cone(&s));
    }
    let mut s = rxy;
    s.insert(xc);
    let mut u = p.upper_cone(&s);
    u.insert(x);
    (lhs, p.lower_cone(&u))
}

/// For a pseudo-orthomodular poset with the `pom` pair: the identity holds
/// for all pairs exactly when divisibility does.
pub fn check_divisibility_characterization(p: &FinitePoset) -> Result<CharacterizationReport> {
    if !is_pseudo_orthomodular(p)?.holds {
        return Err(PosetError::PreconditionFailed("poset is not pseudo-orthomodular".into()));
    }
    let pair = build_pom(p)?;
    let n = p.len();
    let witness = (0..n).find_map(|x| {
        (0..n).find_map(|y| {
            let (lhs, rhs) = divisibility_characterization_sides(&pair, x, y);
            (lhs != rhs).then(|| Witness {
                law: "divisibility_characterization".into(),
                elements: vec![x, y],
                lhs,
                rhs,
            })
        })
    });
    Ok(CharacterizationReport {
        identity: PropertyReport::single("divisibility_characterization", witness),
        reference: pair.verify_divisibility(),
    })
}

/// Values `c` for `x ⊙ y` compatible with left adjointness when `→` is the
/// partial operation `y → z = y' ∨ z`: for every `z` where `y' ∨ z` exists,
/// `c ≤ z ⟺ x ≤ y' ∨ z`.
pub fn adjoint_product_candidates(p: &FinitePoset, x: usize, y: usize) -> Result<ElementSet> {
    let yc = p.require_unary()?.apply(y);
    let arrows: Vec<(usize, usize)> = (0..p.len()).filter_map(|z| p.join(yc, z).map(|j| (z, j))).collect();
    Ok((0..p.len()).filter(|&c| arrows.iter().all(|&(z, j)| p.leq(c, z) == p.leq(x, j))).collect())
}
