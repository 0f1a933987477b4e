//! Canonical forms, automorphisms and isomorphism tests.
//!
//! Elements are first split into classes by iterated colour refinement
//! (height, up/down degree, neighbour colours, colour of the unary image);
//! only class-respecting permutations are then tried. The canonical code
//! lists the relation in "growing square" order, so any prefix of a
//! candidate ordering fixes a prefix of its code and worse branches are cut.

use crate::poset::FinitePoset;

/// Canonical code of a poset (order and unary map; names ignored).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub size: usize,
    pub code: Vec<u8>,
}

fn refine(p: &FinitePoset) -> Vec<usize> {
    let n = p.len();
    let heights = p.heights();
    let unary = p.unary();
    let mut colors: Vec<usize> = {
        let sig: Vec<(usize, usize, usize)> =
            (0..n).map(|x| (heights[x], p.up_set(x).len(), p.down_set(x).len())).collect();
        rank(&sig)
    };
    let mut classes = count_distinct(&colors);
    loop {
        let sig: Vec<(usize, Vec<usize>, Vec<usize>, usize)> = (0..n)
            .map(|x| {
                let mut ups: Vec<usize> = p.up_set(x).iter().filter(|&y| y != x).map(|y| colors[y]).collect();
                let mut downs: Vec<usize> = p.down_set(x).iter().filter(|&y| y != x).map(|y| colors[y]).collect();
                ups.sort_unstable();
                downs.sort_unstable();
                let uc = unary.map(|u| colors[u.apply(x)] + 1).unwrap_or(0);
                (colors[x], ups, downs, uc)
            })
            .collect();
        let next = rank(&sig);
        let next_classes = count_distinct(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn rank<T: Ord + Clone>(sig: &[T]) -> Vec<usize> {
    let mut distinct: Vec<T> = sig.to_vec();
    distinct.sort();
    distinct.dedup();
    sig.iter().map(|s| distinct.binary_search(s).expect("present")).collect()
}

fn count_distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    p: &'a FinitePoset,
    /// colour of each canonical position
    slots: Vec<usize>,
    colors: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    code: Vec<u8>,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    /// Code bits contributed by placing `order[k]`.
    fn extend(&mut self, k: usize) {
        let p = self.p;
        let x = self.order[k];
        let u = p.unary();
        for j in 0..=k {
            let y = self.order[j];
            self.code.push(p.leq(y, x) as u8);
            self.code.push(p.leq(x, y) as u8);
            if let Some(u) = u {
                self.code.push((u.apply(x) == y) as u8);
                self.code.push((u.apply(y) == x) as u8);
            }
        }
    }

    fn run(&mut self, k: usize) {
        let n = self.p.len();
        if k == n {
            if self.best.as_ref().is_none_or(|(b, _)| self.code < *b) {
                self.best = Some((self.code.clone(), self.order.clone()));
            }
            return;
        }
        for x in 0..n {
            if self.used[x] || self.colors[x] != self.slots[k] {
                continue;
            }
            let mark = self.code.len();
            self.order.push(x);
            self.used[x] = true;
            self.extend(k);
            let prune = self.best.as_ref().is_some_and(|(b, _)| self.code.as_slice() > &b[..self.code.len()]);
            if !prune {
                self.run(k + 1);
            }
            self.code.truncate(mark);
            self.used[x] = false;
            self.order.pop();
        }
    }
}

/// Minimum code over all class-respecting orderings of the elements.
pub fn canonical_form(p: &FinitePoset) -> CanonicalForm {
    canonical_labeling(p).0
}

/// Canonical form together with an ordering achieving it (`order[i]` is the
/// element placed at canonical position `i`).
pub fn canonical_labeling(p: &FinitePoset) -> (CanonicalForm, Vec<usize>) {
    let colors = refine(p);
    let mut slots = colors.clone();
    slots.sort_unstable();
    let mut s =
        Search { p, slots, colors, order: Vec::new(), used: vec![false; p.len()], code: Vec::new(), best: None };
    s.run(0);
    let (mut code, order) = s.best.unwrap_or_default();
    code.push(p.unary().is_some() as u8);
    (CanonicalForm { size: p.len(), code }, order)
}

/// Whether two posets are isomorphic as ordered sets with their unary maps.
pub fn is_isomorphic(p: &FinitePoset, q: &FinitePoset) -> bool {
    p.len() == q.len() && p.unary().is_some() == q.unary().is_some() && canonical_form(p) == canonical_form(q)
}

/// All order (and unary) preserving permutations, as `perm[x] = σ(x)`.
pub fn automorphisms(p: &FinitePoset) -> Vec<Vec<usize>> {
    let colors = refine(p);
    let n = p.len();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        p: &FinitePoset,
        colors: &[usize],
        x: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = p.len();
        if x == n {
            out.push(perm.clone());
            return;
        }
        for cand in 0..n {
            if used[cand] || colors[cand] != colors[x] {
                continue;
            }
            let ok = (0..x).all(|y| p.leq(x, y) == p.leq(cand, perm[y]) && p.leq(y, x) == p.leq(perm[y], cand));
            if !ok {
                continue;
            }
            perm[x] = cand;
            let unary_ok = p.unary().is_none_or(|u| {
                (0..=x).all(|y| {
                    let uy = u.apply(y);
                    uy > x || perm[uy] == u.apply(perm[y])
                })
            });
            if unary_ok {
                used[cand] = true;
                go(p, colors, x + 1, perm, used, out);
                used[cand] = false;
            }
            perm[x] = usize::MAX;
        }
    }
    go(p, &colors, 0, &mut perm, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond(names: [&str; 4]) -> FinitePoset {
        let [b, x, y, t] = names;
        FinitePoset::new("d", &[b, x, y, t], &[(b, x), (b, y), (x, t), (y, t)]).unwrap()
    }

    #[test]
    fn relabelled_posets_are_isomorphic() {
        let p = diamond(["0", "a", "b", "1"]);
        let q =
            FinitePoset::new("q", &["t", "x", "y", "b"], &[("b", "x"), ("b", "y"), ("x", "t"), ("y", "t")]).unwrap();
        assert!(is_isomorphic(&p, &q));
        let chain = FinitePoset::new("c", &["0", "a", "b", "1"], &[("0", "a"), ("a", "b"), ("b", "1")]).unwrap();
        assert!(!is_isomorphic(&p, &chain));
    }

    #[test]
    fn unary_distinguishes() {
        let p = diamond(["0", "a", "b", "1"]);
        let swap = p.clone().with_unary_names(&[("0", "1"), ("a", "b"), ("b", "a"), ("1", "0")]).unwrap();
        let fix = p.clone().with_unary_names(&[("0", "1"), ("a", "a"), ("b", "b"), ("1", "0")]).unwrap();
        assert!(!is_isomorphic(&swap, &fix));
        assert!(!is_isomorphic(&swap, &p));
        assert_eq!(automorphisms(&p).len(), 2);
        assert_eq!(automorphisms(&swap).len(), 2);
    }

    #[test]
    fn antichain_automorphisms() {
        let p = FinitePoset::new::<&str>("ac", &["a", "b", "c"], &[]).unwrap();
        assert_eq!(automorphisms(&p).len(), 6);
    }
}
