//! Finite posets with optional bounds and an optional unary operation.
//!
//! Elements are addressed by index in declaration order. Every poset keeps,
//! per element, the bitmask of its principal up-set and down-set; the lower
//! and upper cones of an arbitrary subset are intersections of those masks.

use std::collections::HashMap;

use crate::error::{PosetError, Result};
use crate::set::{ElementSet, MAX_ELEMENTS};

/// A total self-map on the elements of a poset, modelling `x ↦ x'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnaryMap(Vec<usize>);

impl UnaryMap {
    pub fn new(image: Vec<usize>) -> Self {
        UnaryMap(image)
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, set: &ElementSet) -> ElementSet {
        set.iter().map(|x| self.0[x]).collect()
    }

    pub fn is_involution(&self) -> bool {
        (0..self.0.len()).all(|x| self.0[self.0[x]] == x)
    }
}

/// A validated finite poset. Immutable once built.
#[derive(Clone, Debug)]
pub struct FinitePoset {
    name: String,
    names: Vec<String>,
    index: HashMap<String, usize>,
    /// `up[x] = {y | x ≤ y}`
    up: Vec<ElementSet>,
    /// `down[x] = {y | y ≤ x}`
    down: Vec<ElementSet>,
    bottom: Option<usize>,
    top: Option<usize>,
    unary: Option<UnaryMap>,
}

fn check_name(name: &str) -> Result<()> {
    if name.is_empty() || name.chars().any(char::is_whitespace) {
        return Err(PosetError::InvalidName(name.to_string()));
    }
    Ok(())
}

impl FinitePoset {
    /// Builds a poset from element names and `a ≤ b` pairs.
    ///
    /// The pairs may be covers or any generating set of the order: the
    /// reflexive-transitive closure is taken. Bottom and top are detected
    /// when a unique global minimum / maximum exists.
    pub fn new<S: AsRef<str>>(name: &str, elements: &[S], pairs: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        let index = build_index(&names)?;
        let lookup =
            |e: &S| index.get(e.as_ref()).copied().ok_or_else(|| PosetError::UnknownElement(e.as_ref().to_string()));
        let idx_pairs = pairs.iter().map(|(a, b)| Ok((lookup(a)?, lookup(b)?))).collect::<Result<Vec<_>>>()?;
        Self::build(name, names, index, &idx_pairs)
    }

    /// Same as [`FinitePoset::new`] with pairs given by index.
    pub fn from_indices(name: &str, names: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let index = build_index(&names)?;
        for &(a, b) in pairs {
            for i in [a, b] {
                if i >= names.len() {
                    return Err(PosetError::UnknownElement(format!("#{i}")));
                }
            }
        }
        Self::build(name, names, index, pairs)
    }

    /// Builds directly from a closed relation. `up[x]` must be the principal up-set of `x`.
    pub(crate) fn from_up_sets(name: &str, names: Vec<String>, up: Vec<ElementSet>) -> Result<Self> {
        let index = build_index(&names)?;
        let n = names.len();
        let mut pairs = Vec::new();
        for (x, set) in up.iter().enumerate() {
            for y in set.iter().filter(|&y| y < n) {
                pairs.push((x, y));
            }
        }
        Self::build(name, names, index, &pairs)
    }

    fn build(name: &str, names: Vec<String>, index: HashMap<String, usize>, pairs: &[(usize, usize)]) -> Result<Self> {
        check_name(name)?;
        let n = names.len();
        let mut up: Vec<ElementSet> = (0..n).map(ElementSet::singleton).collect();
        for &(a, b) in pairs {
            up[a].insert(b);
        }
        // Warshall over bitmasks.
        for k in 0..n {
            let row = up[k];
            for set in up.iter_mut() {
                if set.contains(k) {
                    set.union_with(&row);
                }
            }
        }
        for a in 0..n {
            for b in up[a].iter() {
                if b != a && up[b].contains(a) {
                    let (x, y) = if a < b { (a, b) } else { (b, a) };
                    return Err(PosetError::CycleDetected(names[x].clone(), names[y].clone()));
                }
            }
        }
        let mut down = vec![ElementSet::empty(); n];
        for (a, ups) in up.iter().enumerate() {
            for b in ups.iter() {
                down[b].insert(a);
            }
        }
        let universe = ElementSet::full(n);
        let bottom = (0..n).find(|&x| up[x] == universe);
        let top = (0..n).find(|&x| down[x] == universe);
        Ok(FinitePoset { name: name.to_string(), names, index, up, down, bottom, top, unary: None })
    }

    /// Attaches a unary operation; `image[x]` is `x'`.
    pub fn with_unary(mut self, map: UnaryMap) -> Result<Self> {
        if map.len() != self.len() {
            return Err(PosetError::NonTotalUnary(format!("{} images for {} elements", map.len(), self.len())));
        }
        if let Some(&bad) = map.as_slice().iter().find(|&&y| y >= self.len()) {
            return Err(PosetError::NonTotalUnary(format!("image #{bad} outside the universe")));
        }
        self.unary = Some(map);
        Ok(self)
    }

    /// Attaches a unary operation given as `(x, x')` name pairs covering every element exactly once.
    pub fn with_unary_names<S: AsRef<str>>(self, pairs: &[(S, S)]) -> Result<Self> {
        let mut image = vec![None; self.len()];
        for (a, b) in pairs {
            let x = self.element(a.as_ref())?;
            let y = self.element(b.as_ref())?;
            if image[x].replace(y).is_some() {
                return Err(PosetError::NonTotalUnary(format!("`{}` has two images", a.as_ref())));
            }
        }
        let image = image
            .into_iter()
            .enumerate()
            .map(|(x, y)| y.ok_or_else(|| PosetError::NonTotalUnary(format!("`{}` has no image", self.names[x]))))
            .collect::<Result<Vec<_>>>()?;
        self.with_unary(UnaryMap::new(image))
    }

    pub fn without_unary(mut self) -> Self {
        self.unary = None;
        self
    }

    pub fn renamed(mut self, name: &str) -> Result<Self> {
        check_name(name)?;
        self.name = name.to_string();
        Ok(self)
    }

    /// Replaces element names, keeping order and structure.
    pub fn with_element_names<S: AsRef<str>>(mut self, names: &[S]) -> Result<Self> {
        if names.len() != self.len() {
            return Err(PosetError::InvalidName(format!("expected {} names", self.len())));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        self.index = build_index(&names)?;
        self.names = names;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name_of(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn element(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| PosetError::UnknownElement(name.to_string()))
    }

    /// Resolves a list of element names to a set.
    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<ElementSet> {
        names.iter().map(|n| self.element(n.as_ref())).collect()
    }

    pub fn names_of(&self, set: &ElementSet) -> Vec<String> {
        set.iter().map(|x| self.names[x].clone()).collect()
    }

    pub fn universe(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    /// `(0, 1)`, or [`PosetError::Unbounded`].
    pub fn bounds(&self) -> Result<(usize, usize)> {
        match (self.bottom, self.top) {
            (Some(b), Some(t)) => Ok((b, t)),
            _ => Err(PosetError::Unbounded),
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.bottom.is_some() && self.top.is_some()
    }

    pub fn unary(&self) -> Option<&UnaryMap> {
        self.unary.as_ref()
    }

    pub fn require_unary(&self) -> Result<&UnaryMap> {
        self.unary.as_ref().ok_or(PosetError::MissingUnary)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// Name-level `a ≤ b`.
    pub fn leq_names(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.leq(self.element(a)?, self.element(b)?))
    }

    /// Principal up-set `{y | x ≤ y}`.
    #[inline]
    pub fn up_set(&self, x: usize) -> ElementSet {
        self.up[x]
    }

    /// Principal down-set `{y | y ≤ x}`, i.e. `L(x)`.
    #[inline]
    pub fn down_set(&self, x: usize) -> ElementSet {
        self.down[x]
    }

    /// `L(S) = {x | x ≤ y for all y ∈ S}`; `L(∅)` is the whole universe.
    pub fn lower_cone(&self, set: &ElementSet) -> ElementSet {
        let mut out = self.universe();
        for y in set {
            out.intersect_with(&self.down[y]);
        }
        out
    }

    /// `U(S) = {x | y ≤ x for all y ∈ S}`; `U(∅)` is the whole universe.
    pub fn upper_cone(&self, set: &ElementSet) -> ElementSet {
        let mut out = self.universe();
        for y in set {
            out.intersect_with(&self.up[y]);
        }
        out
    }

    /// `L(a, b)`.
    #[inline]
    pub fn lower2(&self, a: usize, b: usize) -> ElementSet {
        self.down[a].intersection(&self.down[b])
    }

    /// `U(a, b)`.
    #[inline]
    pub fn upper2(&self, a: usize, b: usize) -> ElementSet {
        self.up[a].intersection(&self.up[b])
    }

    /// Least element of `set`, if any.
    pub fn least(&self, set: &ElementSet) -> Option<usize> {
        set.iter().find(|&c| set.is_subset(&self.up[c]))
    }

    /// Greatest element of `set`, if any.
    pub fn greatest(&self, set: &ElementSet) -> Option<usize> {
        set.iter().find(|&c| set.is_subset(&self.down[c]))
    }

    /// Minimal elements of `set`.
    pub fn minimal(&self, set: &ElementSet) -> ElementSet {
        set.iter().filter(|&c| self.down[c].intersection(set) == ElementSet::singleton(c)).collect()
    }

    /// Maximal elements of `set`.
    pub fn maximal(&self, set: &ElementSet) -> ElementSet {
        set.iter().filter(|&c| self.up[c].intersection(set) == ElementSet::singleton(c)).collect()
    }

    /// `a ∨ b` when `U(a, b)` has a least element.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.least(&self.upper2(a, b))
    }

    /// `a ∧ b` when `L(a, b)` has a greatest element.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.greatest(&self.lower2(a, b))
    }

    /// `A' = {x' | x ∈ A}`.
    pub fn apply_unary(&self, set: &ElementSet) -> Result<ElementSet> {
        Ok(self.require_unary()?.image(set))
    }

    /// Covering pairs `(a, b)` with `a < b` and nothing strictly between, ordered by `(a, b)`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            let mut above = self.up[a];
            above.remove(a);
            for b in above.iter() {
                let mut below = self.down[b];
                below.remove(b);
                if above.intersection(&below).is_empty() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Length of the longest chain ending at each element.
    pub fn heights(&self) -> Vec<usize> {
        let n = self.len();
        let mut height = vec![0; n];
        // Process in order of down-set size, which is a linear extension.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| self.down[x].len());
        for &x in &order {
            height[x] = self.down[x].iter().filter(|&y| y != x).map(|y| height[y] + 1).max().unwrap_or(0);
        }
        height
    }
}

fn build_index(names: &[String]) -> Result<HashMap<String, usize>> {
    if names.len() > MAX_ELEMENTS {
        return Err(PosetError::TooManyElements(names.len()));
    }
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        check_name(name)?;
        if index.insert(name.clone(), i).is_some() {
            return Err(PosetError::DuplicateElement(name.clone()));
        }
    }
    Ok(index)
}

/// Element-wise identity: same names in the same order, same order relation,
/// same bounds and same unary map.
impl PartialEq for FinitePoset {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.names == other.names
            && self.up == other.up
            && self.bottom == other.bottom
            && self.top == other.top
            && self.unary == other.unary
    }
}

impl Eq for FinitePoset {}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig2() -> FinitePoset {
        FinitePoset::new(
            "fig2",
            &["0", "a", "b", "c", "d", "1"],
            &[("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")],
        )
        .unwrap()
    }

    #[test]
    fn two_chain_bounds() {
        let p = FinitePoset::new("c2", &["0", "1"], &[("0", "1")]).unwrap();
        assert_eq!(p.bottom(), Some(0));
        assert_eq!(p.top(), Some(1));
        assert!(p.leq(0, 1) && !p.leq(1, 0));
    }

    #[test]
    fn fig2_shape() {
        let p = fig2();
        assert_eq!(p.len(), 6);
        assert_eq!(p.bounds().unwrap(), (0, 5));
        assert_eq!(p.covers().len(), 8);
        assert!(p.leq_names("a", "c").unwrap());
        assert!(!p.leq_names("c", "d").unwrap());
        assert!(p.leq_names("0", "1").unwrap());
        assert_eq!(p.heights(), vec![0, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn cycle_detected() {
        let err = FinitePoset::new("bad", &["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert_eq!(err, PosetError::CycleDetected("a".into(), "b".into()));
    }

    #[test]
    fn duplicate_and_unknown() {
        let err = FinitePoset::new::<&str>("bad", &["a", "a"], &[]).unwrap_err();
        assert_eq!(err, PosetError::DuplicateElement("a".into()));
        let err = FinitePoset::new("bad", &["a", "b"], &[("a", "z")]).unwrap_err();
        assert_eq!(err, PosetError::UnknownElement("z".into()));
        let err = FinitePoset::new::<&str>("bad", &["a b"], &[]).unwrap_err();
        assert!(matches!(err, PosetError::InvalidName(_)));
    }

    #[test]
    fn full_relation_pairs_accepted() {
        let covers = FinitePoset::new("c3", &["0", "m", "1"], &[("0", "m"), ("m", "1")]).unwrap();
        let full = FinitePoset::new("c3", &["0", "m", "1"], &[("0", "m"), ("m", "1"), ("0", "1"), ("m", "m")]).unwrap();
        assert_eq!(covers, full);
    }

    #[test]
    fn unbounded_antichain() {
        let p = FinitePoset::new::<&str>("ac", &["a", "b"], &[]).unwrap();
        assert_eq!(p.bottom(), None);
        assert_eq!(p.bounds(), Err(PosetError::Unbounded));
    }

    #[test]
    fn cones_on_fig2() {
        let p = fig2();
        let s = |names: &[&str]| p.set_of(names).unwrap();
        assert_eq!(p.lower_cone(&s(&["c", "d"])), s(&["0", "a", "b"]));
        assert_eq!(p.upper_cone(&s(&["a", "d"])), s(&["d", "1"]));
        assert_eq!(p.upper_cone(&s(&["a", "b"])), s(&["c", "d", "1"]));
        assert_eq!(p.lower_cone(&ElementSet::empty()), p.universe());
        assert_eq!(p.upper_cone(&s(&["1"])), s(&["1"]));
    }

    #[test]
    fn partial_join_meet() {
        let p = fig2();
        let (a, b, c, d) = (1, 2, 3, 4);
        assert_eq!(p.join(a, b), None);
        assert_eq!(p.meet(c, d), None);
        assert_eq!(p.join(c, d), Some(5));
        assert_eq!(p.join(a, 0), Some(a));
        assert_eq!(p.meet(a, c), Some(a));
        assert_eq!(p.minimal(&p.upper2(a, b)), p.set_of(&["c", "d"]).unwrap());
    }

    #[test]
    fn unary_application() {
        let p =
            fig2().with_unary_names(&[("0", "1"), ("a", "d"), ("b", "c"), ("c", "b"), ("d", "a"), ("1", "0")]).unwrap();
        let s = |names: &[&str]| p.set_of(names).unwrap();
        assert_eq!(p.apply_unary(&s(&["a", "b"])).unwrap(), s(&["d", "c"]));
        assert_eq!(p.apply_unary(&ElementSet::empty()).unwrap(), ElementSet::empty());
        assert_eq!(fig2().apply_unary(&s(&["a"])), Err(PosetError::MissingUnary));
    }

    #[test]
    fn partial_unary_rejected() {
        let err = fig2().with_unary_names(&[("0", "1")]).unwrap_err();
        assert!(matches!(err, PosetError::NonTotalUnary(_)));
        let err = fig2().with_unary_names(&[("0", "1"), ("0", "a")]).unwrap_err();
        assert!(matches!(err, PosetError::NonTotalUnary(_)));
    }
}
