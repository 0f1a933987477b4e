//! Decision procedures for the poset classes built from cone operators.
//!
//! Every class is described by one or more [`Law`]s, each a quantified
//! statement over a fixed number of elements. A checker quantifies its laws
//! in lexicographic element order and reports the first failing tuple, so
//! witnesses are reproducible: [`Law::evaluate`] at the witness tuple yields
//! the same two sides again.

use std::fmt;
use std::str::FromStr;

use crate::error::{PosetError, Result};
use crate::poset::FinitePoset;
use crate::report::{FormVerdict, PropertyReport, Witness};
use crate::set::ElementSet;

/// Result of evaluating a law at one tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// The premise of an implication is false.
    Vacuous,
    Holds,
    Fails {
        lhs: ElementSet,
        rhs: ElementSet,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    /// `x ≤ y ⇒ y' ≤ x'`
    Antitone,
    /// `x'' = x`
    Involution,
    /// `U(x,y)' = L(x',y')`
    DeMorganUpper,
    /// `L(x,y)' = U(x',y')`
    DeMorganLower,
    /// `x ∨ y` exists
    JoinExists,
    /// `x ∧ y` exists
    MeetExists,
    /// `x ≤ z ⇒ L(U(x,y),z) = L(U(x,L(y,z)))`
    ModularLower,
    /// `x ≤ z ⇒ U(x,L(y,z)) = U(L(U(x,y),z))`
    ModularUpper,
    /// `L(U(x,y),z) = L(U(L(x,z),L(y,z)))`
    DistributiveLower,
    /// `U(L(x,y),z) = U(L(U(x,z),U(y,z)))`
    DistributiveUpper,
    /// `L(x,x') = {0}`
    ComplementLower,
    /// `U(x,x') = {1}`
    ComplementUpper,
    /// `L(U(x,y),y') = L(x,y')`
    PseudoBooleanLower,
    /// `U(L(x,y),y') = U(x,y')`
    PseudoBooleanUpper,
    /// `L(U(L(x,y),y'),y) = L(x,y)`
    PseudoOrthomodularLower,
    /// `U(L(U(x,y),y'),y) = U(x,y)`
    PseudoOrthomodularUpper,
    /// `L(U(L(x,y),y'),y) ⊇ L(x,y)`
    WeakPseudoOrthomodularLower,
    /// `U(L(U(x,y),y'),y) ⊇ U(x,y)`
    WeakPseudoOrthomodularUpper,
    /// `x ≤ y' ⇒ x ∨ y` exists
    Orthogonal,
    /// `((x∧y)∨y')∧y = x∧y` whenever `x∧y` exists
    OrthomodularMeet,
    /// `((x∨y)∧y')∨y = x∨y` whenever `x∨y` exists
    OrthomodularJoin,
    /// a greatest `c` with `L(x,c) ⊆ L(y)` exists
    RelativePseudocomplementExists,
}

impl Law {
    pub const ALL: [Law; 22] = [
        Law::Antitone,
        Law::Involution,
        Law::DeMorganUpper,
        Law::DeMorganLower,
        Law::JoinExists,
        Law::MeetExists,
        Law::ModularLower,
        Law::ModularUpper,
        Law::DistributiveLower,
        Law::DistributiveUpper,
        Law::ComplementLower,
        Law::ComplementUpper,
        Law::PseudoBooleanLower,
        Law::PseudoBooleanUpper,
        Law::PseudoOrthomodularLower,
        Law::PseudoOrthomodularUpper,
        Law::WeakPseudoOrthomodularLower,
        Law::WeakPseudoOrthomodularUpper,
        Law::Orthogonal,
        Law::OrthomodularMeet,
        Law::OrthomodularJoin,
        Law::RelativePseudocomplementExists,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Antitone => "antitone",
            Law::Involution => "involution",
            Law::DeMorganUpper => "de_morgan_upper",
            Law::DeMorganLower => "de_morgan_lower",
            Law::JoinExists => "join_exists",
            Law::MeetExists => "meet_exists",
            Law::ModularLower => "modular_lower",
            Law::ModularUpper => "modular_upper",
            Law::DistributiveLower => "distributive_lower",
            Law::DistributiveUpper => "distributive_upper",
            Law::ComplementLower => "complement_lower",
            Law::ComplementUpper => "complement_upper",
            Law::PseudoBooleanLower => "pseudo_boolean_lower",
            Law::PseudoBooleanUpper => "pseudo_boolean_upper",
            Law::PseudoOrthomodularLower => "pseudo_orthomodular_lower",
            Law::PseudoOrthomodularUpper => "pseudo_orthomodular_upper",
            Law::WeakPseudoOrthomodularLower => "weak_pseudo_orthomodular_lower",
            Law::WeakPseudoOrthomodularUpper => "weak_pseudo_orthomodular_upper",
            Law::Orthogonal => "orthogonal",
            Law::OrthomodularMeet => "orthomodular_meet",
            Law::OrthomodularJoin => "orthomodular_join",
            Law::RelativePseudocomplementExists => "relative_pseudocomplement_exists",
        }
    }

    pub fn from_name(name: &str) -> Option<Law> {
        Law::ALL.into_iter().find(|l| l.name() == name)
    }

    pub fn arity(self) -> usize {
        match self {
            Law::Involution | Law::ComplementLower | Law::ComplementUpper => 1,
            Law::ModularLower | Law::ModularUpper | Law::DistributiveLower | Law::DistributiveUpper => 3,
            _ => 2,
        }
    }

    /// Evaluates the law at one tuple of element indices.
    pub fn evaluate(self, p: &FinitePoset, args: &[usize]) -> Result<Outcome> {
        assert_eq!(args.len(), self.arity(), "wrong number of arguments for {}", self.name());
        let eq = |lhs: ElementSet, rhs: ElementSet| {
            if lhs == rhs {
                Outcome::Holds
            } else {
                Outcome::Fails { lhs, rhs }
            }
        };
        let with = |mut s: ElementSet, x: usize| {
            s.insert(x);
            s
        };
        let x = args[0];
        let y = args.get(1).copied().unwrap_or(x);
        let z = args.get(2).copied().unwrap_or(x);
        let out = match self {
            Law::Antitone => {
                let u = p.require_unary()?;
                if !p.leq(x, y) {
                    Outcome::Vacuous
                } else if p.leq(u.apply(y), u.apply(x)) {
                    Outcome::Holds
                } else {
                    Outcome::Fails { lhs: p.down_set(u.apply(y)), rhs: p.down_set(u.apply(x)) }
                }
            }
            Law::Involution => {
                let u = p.require_unary()?;
                eq(ElementSet::singleton(u.apply(u.apply(x))), ElementSet::singleton(x))
            }
            Law::DeMorganUpper => {
                let u = p.require_unary()?;
                eq(u.image(&p.upper2(x, y)), p.lower2(u.apply(x), u.apply(y)))
            }
            Law::DeMorganLower => {
                let u = p.require_unary()?;
                eq(u.image(&p.lower2(x, y)), p.upper2(u.apply(x), u.apply(y)))
            }
            Law::JoinExists => {
                let ub = p.upper2(x, y);
                match p.least(&ub) {
                    Some(_) => Outcome::Holds,
                    None => Outcome::Fails { lhs: ub, rhs: p.minimal(&ub) },
                }
            }
            Law::MeetExists => {
                let lb = p.lower2(x, y);
                match p.greatest(&lb) {
                    Some(_) => Outcome::Holds,
                    None => Outcome::Fails { lhs: lb, rhs: p.maximal(&lb) },
                }
            }
            Law::ModularLower => {
                if !p.leq(x, z) {
                    Outcome::Vacuous
                } else {
                    let lhs = p.lower_cone(&with(p.upper2(x, y), z));
                    let rhs = p.lower_cone(&p.upper_cone(&with(p.lower2(y, z), x)));
                    eq(lhs, rhs)
                }
            }
            Law::ModularUpper => {
                if !p.leq(x, z) {
                    Outcome::Vacuous
                } else {
                    let lhs = p.upper_cone(&with(p.lower2(y, z), x));
                    let rhs = p.upper_cone(&p.lower_cone(&with(p.upper2(x, y), z)));
                    eq(lhs, rhs)
                }
            }
            Law::DistributiveLower => {
                let lhs = p.lower_cone(&with(p.upper2(x, y), z));
                let rhs = p.lower_cone(&p.upper_cone(&p.lower2(x, z).union(&p.lower2(y, z))));
                eq(lhs, rhs)
            }
            Law::DistributiveUpper => {
                let lhs = p.upper_cone(&with(p.lower2(x, y), z));
                let rhs = p.upper_cone(&p.lower_cone(&p.upper2(x, z).union(&p.upper2(y, z))));
                eq(lhs, rhs)
            }
            Law::ComplementLower => {
                let (bottom, _) = p.bounds()?;
                let u = p.require_unary()?;
                eq(p.lower2(x, u.apply(x)), ElementSet::singleton(bottom))
            }
            Law::ComplementUpper => {
                let (_, top) = p.bounds()?;
                let u = p.require_unary()?;
                eq(p.upper2(x, u.apply(x)), ElementSet::singleton(top))
            }
            Law::PseudoBooleanLower => {
                let yc = p.require_unary()?.apply(y);
                eq(p.lower_cone(&with(p.upper2(x, y), yc)), p.lower2(x, yc))
            }
            Law::PseudoBooleanUpper => {
                let yc = p.require_unary()?.apply(y);
                eq(p.upper_cone(&with(p.lower2(x, y), yc)), p.upper2(x, yc))
            }
            Law::PseudoOrthomodularLower | Law::WeakPseudoOrthomodularLower => {
                let yc = p.require_unary()?.apply(y);
                let lhs = p.lower_cone(&with(p.upper_cone(&with(p.lower2(x, y), yc)), y));
                let rhs = p.lower2(x, y);
                if self == Law::PseudoOrthomodularLower {
                    eq(lhs, rhs)
                } else if rhs.is_subset(&lhs) {
                    Outcome::Holds
                } else {
                    Outcome::Fails { lhs: rhs, rhs: lhs }
                }
            }
            Law::PseudoOrthomodularUpper | Law::WeakPseudoOrthomodularUpper => {
                let yc = p.require_unary()?.apply(y);
                let lhs = p.upper_cone(&with(p.lower_cone(&with(p.upper2(x, y), yc)), y));
                let rhs = p.upper2(x, y);
                if self == Law::PseudoOrthomodularUpper {
                    eq(lhs, rhs)
                } else if rhs.is_subset(&lhs) {
                    Outcome::Holds
                } else {
                    Outcome::Fails { lhs: rhs, rhs: lhs }
                }
            }
            Law::Orthogonal => {
                let yc = p.require_unary()?.apply(y);
                if !p.leq(x, yc) {
                    Outcome::Vacuous
                } else {
                    Law::JoinExists.evaluate(p, &[x, y])?
                }
            }
            Law::OrthomodularMeet => {
                let u = p.require_unary()?;
                match p.meet(x, y) {
                    None => Outcome::Vacuous,
                    Some(m) => {
                        let j = p.join(m, u.apply(y)).ok_or_else(|| missing(p, "join", m, u.apply(y)))?;
                        let r = p.meet(j, y).ok_or_else(|| missing(p, "meet", j, y))?;
                        eq(ElementSet::singleton(r), ElementSet::singleton(m))
                    }
                }
            }
            Law::OrthomodularJoin => {
                let u = p.require_unary()?;
                match p.join(x, y) {
                    None => Outcome::Vacuous,
                    Some(j) => {
                        let m = p.meet(j, u.apply(y)).ok_or_else(|| missing(p, "meet", j, u.apply(y)))?;
                        let r = p.join(m, y).ok_or_else(|| missing(p, "join", m, y))?;
                        eq(ElementSet::singleton(r), ElementSet::singleton(j))
                    }
                }
            }
            Law::RelativePseudocomplementExists => {
                let cands = rpc_candidates(p, x, y);
                match p.greatest(&cands) {
                    Some(_) => Outcome::Holds,
                    None => Outcome::Fails { lhs: cands, rhs: p.maximal(&cands) },
                }
            }
        };
        Ok(out)
    }

    /// First failing tuple in lexicographic order, if any.
    pub fn quantify(self, p: &FinitePoset) -> Result<Option<Witness>> {
        let n = p.len();
        let k = self.arity();
        if n == 0 {
            return Ok(None);
        }
        let mut args = vec![0; k];
        loop {
            if let Outcome::Fails { lhs, rhs } = self.evaluate(p, &args)? {
                return Ok(Some(Witness { law: self.name().to_string(), elements: args, lhs, rhs }));
            }
            // odometer, last position fastest
            let mut i = k;
            loop {
                if i == 0 {
                    return Ok(None);
                }
                i -= 1;
                args[i] += 1;
                if args[i] < n {
                    break;
                }
                args[i] = 0;
            }
        }
    }

    fn form(self, p: &FinitePoset) -> Result<FormVerdict> {
        Ok(FormVerdict::new(self.name(), self.quantify(p)?))
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn missing(p: &FinitePoset, op: &str, a: usize, b: usize) -> PosetError {
    PosetError::MissingOperand(format!("{op} of {} and {} does not exist", p.name_of(a), p.name_of(b)))
}

fn rpc_candidates(p: &FinitePoset, a: usize, b: usize) -> ElementSet {
    let target = p.down_set(b);
    (0..p.len()).filter(|&c| p.lower2(a, c).is_subset(&target)).collect()
}

fn conjunction(property: &str, p: &FinitePoset, laws: &[Law]) -> Result<PropertyReport> {
    let forms = laws.iter().map(|l| l.form(p)).collect::<Result<Vec<_>>>()?;
    Ok(PropertyReport::conjunction(property, forms))
}

fn infallible(r: Result<PropertyReport>) -> PropertyReport {
    r.expect("order-only laws do not fail")
}

fn require(report: PropertyReport, what: &str, p: &FinitePoset) -> Result<()> {
    if report.holds {
        return Ok(());
    }
    let at = report
        .witness
        .as_ref()
        .map(|w| {
            let names: Vec<&str> = w.elements.iter().map(|&x| p.name_of(x)).collect();
            format!(" ({} fails at {})", w.law, names.join(","))
        })
        .unwrap_or_default();
    Err(PosetError::PreconditionFailed(format!("{what} does not hold{at}")))
}

/// `x ≤ y ⇒ y' ≤ x'` and `x'' = x`.
pub fn is_antitone_involution(p: &FinitePoset) -> Result<PropertyReport> {
    conjunction("antitone_involution", p, &[Law::Antitone, Law::Involution])
}

/// Both De Morgan identities for cones. Requires an antitone involution.
pub fn de_morgan(p: &FinitePoset) -> Result<PropertyReport> {
    require(is_antitone_involution(p)?, "antitone involution", p)?;
    conjunction("de_morgan", p, &[Law::DeMorganUpper, Law::DeMorganLower])
}

/// Every pair has a join and a meet.
pub fn is_lattice(p: &FinitePoset) -> PropertyReport {
    infallible(conjunction("lattice", p, &[Law::JoinExists, Law::MeetExists]))
}

/// Both modularity conditions; `forms` records each verdict.
pub fn is_modular(p: &FinitePoset) -> PropertyReport {
    infallible(conjunction("modular", p, &[Law::ModularLower, Law::ModularUpper]))
}

pub fn is_distributive(p: &FinitePoset) -> PropertyReport {
    infallible(conjunction("distributive", p, &[Law::DistributiveLower, Law::DistributiveUpper]))
}

/// `L(x,x')={0}` and `U(x,x')={1}` for an antitone involution.
pub fn is_complementation(p: &FinitePoset) -> Result<PropertyReport> {
    p.bounds()?;
    p.require_unary()?;
    conjunction("complementation", p, &[Law::ComplementLower, Law::ComplementUpper, Law::Antitone, Law::Involution])
}

/// Distributive with a complementation.
pub fn is_boolean(p: &FinitePoset) -> Result<PropertyReport> {
    let d = is_distributive(p);
    let c = is_complementation(p)?;
    let forms = vec![FormVerdict::new("distributive", d.witness), FormVerdict::new("complementation", c.witness)];
    Ok(PropertyReport::conjunction("boolean", forms))
}

fn complemented_identity(p: &FinitePoset, property: &str, lower: Law, upper: Law) -> Result<PropertyReport> {
    let c = is_complementation(p)?;
    let forms = vec![FormVerdict::new("complementation", c.witness), lower.form(p)?, upper.form(p)?];
    Ok(PropertyReport::conjunction(property, forms))
}

/// Complementation plus `L(U(x,y),y') = L(x,y')` (and its dual).
pub fn is_pseudo_boolean(p: &FinitePoset) -> Result<PropertyReport> {
    complemented_identity(p, "pseudo_boolean", Law::PseudoBooleanLower, Law::PseudoBooleanUpper)
}

/// Complementation plus `L(U(L(x,y),y'),y) = L(x,y)` (and its dual).
pub fn is_pseudo_orthomodular(p: &FinitePoset) -> Result<PropertyReport> {
    complemented_identity(p, "pseudo_orthomodular", Law::PseudoOrthomodularLower, Law::PseudoOrthomodularUpper)
}

/// The two inclusions that hold in every complemented poset.
pub fn weak_pseudo_orthomodular(p: &FinitePoset) -> Result<PropertyReport> {
    conjunction("weak_pseudo_orthomodular", p, &[Law::WeakPseudoOrthomodularLower, Law::WeakPseudoOrthomodularUpper])
}

/// `x ≤ y' ⇒ x ∨ y exists`. Requires a complementation.
pub fn is_orthogonal(p: &FinitePoset) -> Result<PropertyReport> {
    require(is_complementation(p)?, "complementation", p)?;
    Ok(PropertyReport::single("orthogonal", Law::Orthogonal.quantify(p)?))
}

/// Both orthomodular laws over partial joins and meets. Requires orthogonality.
pub fn is_orthomodular(p: &FinitePoset) -> Result<PropertyReport> {
    require(is_orthogonal(p)?, "orthogonality", p)?;
    conjunction("orthomodular", p, &[Law::OrthomodularMeet, Law::OrthomodularJoin])
}

/// Greatest `c` with `L(a,c) ⊆ L(b)`, when the candidate set has one.
pub fn relative_pseudocomplement(p: &FinitePoset, a: usize, b: usize) -> Option<usize> {
    p.greatest(&rpc_candidates(p, a, b))
}

/// `table[a][b] = a*b`.
pub fn relative_pseudocomplement_table(p: &FinitePoset) -> Vec<Vec<Option<usize>>> {
    (0..p.len()).map(|a| (0..p.len()).map(|b| relative_pseudocomplement(p, a, b)).collect()).collect()
}

/// `x* = x*0` for every `x`, when all of them exist.
pub fn pseudocomplements(p: &FinitePoset) -> Option<Vec<usize>> {
    let bottom = p.bottom()?;
    (0..p.len()).map(|x| relative_pseudocomplement(p, x, bottom)).collect()
}

pub fn is_relatively_pseudocomplemented(p: &FinitePoset) -> PropertyReport {
    PropertyReport::single(
        "relatively_pseudocomplemented",
        Law::RelativePseudocomplementExists.quantify(p).expect("order-only law"),
    )
}

/// Named poset classes, for the CLI and the search filters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Lattice,
    Modular,
    Distributive,
    AntitoneInvolution,
    DeMorgan,
    Complementation,
    Boolean,
    PseudoBoolean,
    PseudoOrthomodular,
    Orthogonal,
    Orthomodular,
    RelativelyPseudocomplemented,
}

impl Property {
    pub const ALL: [Property; 12] = [
        Property::Lattice,
        Property::Modular,
        Property::Distributive,
        Property::AntitoneInvolution,
        Property::DeMorgan,
        Property::Complementation,
        Property::Boolean,
        Property::PseudoBoolean,
        Property::PseudoOrthomodular,
        Property::Orthogonal,
        Property::Orthomodular,
        Property::RelativelyPseudocomplemented,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Lattice => "lattice",
            Property::Modular => "modular",
            Property::Distributive => "distributive",
            Property::AntitoneInvolution => "antitone_involution",
            Property::DeMorgan => "de_morgan",
            Property::Complementation => "complementation",
            Property::Boolean => "boolean",
            Property::PseudoBoolean => "pseudo_boolean",
            Property::PseudoOrthomodular => "pseudo_orthomodular",
            Property::Orthogonal => "orthogonal",
            Property::Orthomodular => "orthomodular",
            Property::RelativelyPseudocomplemented => "relatively_pseudocomplemented",
        }
    }

    /// The quantified laws this property is built from (prerequisite
    /// classes excluded), for pointwise evaluation.
    pub fn laws(self) -> &'static [Law] {
        match self {
            Property::Lattice => &[Law::JoinExists, Law::MeetExists],
            Property::Modular => &[Law::ModularLower, Law::ModularUpper],
            Property::Distributive => &[Law::DistributiveLower, Law::DistributiveUpper],
            Property::AntitoneInvolution => &[Law::Antitone, Law::Involution],
            Property::DeMorgan => &[Law::DeMorganUpper, Law::DeMorganLower],
            Property::Complementation => &[Law::ComplementLower, Law::ComplementUpper, Law::Antitone, Law::Involution],
            Property::Boolean => &[Law::DistributiveLower, Law::DistributiveUpper],
            Property::PseudoBoolean => &[Law::PseudoBooleanLower, Law::PseudoBooleanUpper],
            Property::PseudoOrthomodular => &[Law::PseudoOrthomodularLower, Law::PseudoOrthomodularUpper],
            Property::Orthogonal => &[Law::Orthogonal],
            Property::Orthomodular => &[Law::OrthomodularMeet, Law::OrthomodularJoin],
            Property::RelativelyPseudocomplemented => &[Law::RelativePseudocomplementExists],
        }
    }

    pub fn check(self, p: &FinitePoset) -> Result<PropertyReport> {
        match self {
            Property::Lattice => Ok(is_lattice(p)),
            Property::Modular => Ok(is_modular(p)),
            Property::Distributive => Ok(is_distributive(p)),
            Property::AntitoneInvolution => is_antitone_involution(p),
            Property::DeMorgan => de_morgan(p),
            Property::Complementation => is_complementation(p),
            Property::Boolean => is_boolean(p),
            Property::PseudoBoolean => is_pseudo_boolean(p),
            Property::PseudoOrthomodular => is_pseudo_orthomodular(p),
            Property::Orthogonal => is_orthogonal(p),
            Property::Orthomodular => is_orthomodular(p),
            Property::RelativelyPseudocomplemented => Ok(is_relatively_pseudocomplemented(p)),
        }
    }

    /// Verdict with unmet preconditions (missing bounds, missing unary,
    /// failed prerequisite class) counted as "does not hold".
    pub fn holds(self, p: &FinitePoset) -> bool {
        self.check(p).map(|r| r.holds).unwrap_or(false)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        Property::ALL.into_iter().find(|p| p.name() == norm).ok_or_else(|| PosetError::UnknownProperty(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn fig(id: &str) -> FinitePoset {
        catalog::get(id).unwrap().poset
    }

    #[test]
    fn lattice_witness_is_first_pair_without_join() {
        let p = fig("fig2");
        let r = is_lattice(&p);
        let w = r.witness.unwrap();
        assert_eq!(w.law, "join_exists");
        assert_eq!(p.names_of(&ElementSet::from_indices(w.elements.iter().copied())), ["a", "b"]);
        // U(a,b) = {c,d,1} has no least element
        assert_eq!(p.names_of(&w.lhs), ["c", "d", "1"]);
    }

    #[test]
    fn witnesses_reproduce_under_evaluate() {
        for id in catalog::list() {
            let p = fig(&id);
            for prop in Property::ALL {
                let Ok(report) = prop.check(&p) else { continue };
                for form in &report.forms {
                    if let Some(w) = &form.witness {
                        let law = Law::from_name(&w.law).unwrap();
                        assert_eq!(
                            law.evaluate(&p, &w.elements).unwrap(),
                            Outcome::Fails { lhs: w.lhs, rhs: w.rhs },
                            "{id} {prop}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn preconditions_surface_as_errors() {
        let p = fig("fig2");
        assert!(matches!(is_orthogonal(&p), Err(PosetError::PreconditionFailed(_))));
        assert!(!Property::Orthogonal.holds(&p));
        let bare = p.without_unary();
        assert_eq!(is_complementation(&bare).unwrap_err(), PosetError::MissingUnary);
    }

    #[test]
    fn pseudocomplements_of_fig2() {
        let p = fig("fig2");
        let star = pseudocomplements(&p).unwrap();
        let names: Vec<&str> = star.iter().map(|&x| p.name_of(x)).collect();
        assert_eq!(names, ["1", "b", "a", "0", "0", "0"]);
    }

    #[test]
    fn property_names_parse() {
        assert_eq!("pseudo-orthomodular".parse::<Property>().unwrap(), Property::PseudoOrthomodular);
        assert!(matches!("modularish".parse::<Property>(), Err(PosetError::UnknownProperty(_))));
        for l in Law::ALL {
            assert_eq!(Law::from_name(l.name()), Some(l));
        }
    }
}
