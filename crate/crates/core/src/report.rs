//! Verdicts with reproducible witnesses, plus name-level views for JSON output.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::poset::FinitePoset;
use crate::set::ElementSet;

/// A point at which a quantified law fails, with both evaluated sides.
///
/// For equalities `lhs` and `rhs` are the two unequal sides. For inclusions
/// and implications `lhs` is the set that should have been contained in
/// `rhs`; for existence laws `lhs` is the candidate set and `rhs` its
/// minimal (or maximal) elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub law: String,
    pub elements: Vec<usize>,
    pub lhs: ElementSet,
    pub rhs: ElementSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormVerdict {
    pub form: String,
    pub holds: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: String,
    pub holds: bool,
    pub witness: Option<Witness>,
    /// Verdict of each formulation that was evaluated, in evaluation order.
    pub forms: Vec<FormVerdict>,
}

impl PropertyReport {
    pub(crate) fn single(property: &str, witness: Option<Witness>) -> Self {
        PropertyReport { property: property.to_string(), holds: witness.is_none(), witness, forms: Vec::new() }
    }

    /// Conjunction of the forms; the witness is the first failing form's.
    pub(crate) fn conjunction(property: &str, forms: Vec<FormVerdict>) -> Self {
        let witness = forms.iter().find_map(|f| f.witness.clone());
        PropertyReport { property: property.to_string(), holds: forms.iter().all(|f| f.holds), witness, forms }
    }

    pub fn form(&self, name: &str) -> Option<&FormVerdict> {
        self.forms.iter().find(|f| f.form == name)
    }

    /// Whether the named formulations returned the same verdict.
    pub fn forms_agree(&self, a: &str, b: &str) -> bool {
        match (self.form(a), self.form(b)) {
            (Some(x), Some(y)) => x.holds == y.holds,
            _ => false,
        }
    }

    pub fn named(&self, poset: &FinitePoset) -> NamedReport {
        NamedReport {
            property: self.property.clone(),
            holds: self.holds,
            witness: self.witness.as_ref().map(|w| w.named(poset)),
            forms: self.forms.iter().map(|f| (f.form.clone(), f.holds)).collect(),
        }
    }
}

impl FormVerdict {
    pub(crate) fn new(form: &str, witness: Option<Witness>) -> Self {
        FormVerdict { form: form.to_string(), holds: witness.is_none(), witness }
    }
}

impl Witness {
    pub fn named(&self, poset: &FinitePoset) -> NamedWitness {
        NamedWitness {
            law: self.law.clone(),
            elements: self.elements.iter().map(|&x| poset.name_of(x).to_string()).collect(),
            lhs: poset.names_of(&self.lhs),
            rhs: poset.names_of(&self.rhs),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedWitness {
    pub law: String,
    pub elements: Vec<String>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedReport {
    pub property: String,
    pub holds: bool,
    pub witness: Option<NamedWitness>,
    pub forms: BTreeMap<String, bool>,
}
