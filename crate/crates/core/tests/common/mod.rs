//! Brute-force reference implementation used as a test oracle. Orders are
//! plain boolean matrices closed by Floyd–Warshall, sets are `u64` masks and
//! every law is evaluated by direct quantification.

#![allow(dead_code)]

use posetlab::FinitePoset;

#[derive(Clone, Debug)]
pub struct Oracle {
    pub n: usize,
    pub le: Vec<Vec<bool>>,
    pub comp: Option<Vec<usize>>,
}

pub fn bit(x: usize) -> u64 {
    1 << x
}

impl Oracle {
    pub fn new(n: usize, pairs: &[(usize, usize)], comp: Option<Vec<usize>>) -> Self {
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in pairs {
            le[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if le[i][k] && le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
        Oracle { n, le, comp }
    }

    /// Rebuilds the order from the covering pairs only.
    pub fn of(p: &FinitePoset) -> Self {
        Oracle::new(p.len(), &p.covers(), p.unary().map(|u| u.as_slice().to_vec()))
    }

    pub fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1 << self.n) - 1
        }
    }

    pub fn lower(&self, s: u64) -> u64 {
        (0..self.n).filter(|&x| (0..self.n).all(|y| s & bit(y) == 0 || self.le[x][y])).fold(0, |m, x| m | bit(x))
    }

    pub fn upper(&self, s: u64) -> u64 {
        (0..self.n).filter(|&x| (0..self.n).all(|y| s & bit(y) == 0 || self.le[y][x])).fold(0, |m, x| m | bit(x))
    }

    pub fn l(&self, xs: &[usize]) -> u64 {
        self.lower(xs.iter().fold(0, |m, &x| m | bit(x)))
    }

    pub fn u(&self, xs: &[usize]) -> u64 {
        self.upper(xs.iter().fold(0, |m, &x| m | bit(x)))
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.n).find(|&x| (0..self.n).all(|y| self.le[x][y]))
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.n).find(|&x| (0..self.n).all(|y| self.le[y][x]))
    }

    fn least_in(&self, s: u64) -> Option<usize> {
        (0..self.n).find(|&x| s & bit(x) != 0 && (0..self.n).all(|y| s & bit(y) == 0 || self.le[x][y]))
    }

    fn greatest_in(&self, s: u64) -> Option<usize> {
        (0..self.n).find(|&x| s & bit(x) != 0 && (0..self.n).all(|y| s & bit(y) == 0 || self.le[y][x]))
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.least_in(self.u(&[x, y]))
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.greatest_in(self.l(&[x, y]))
    }

    pub fn c(&self, x: usize) -> usize {
        self.comp.as_ref().expect("unary map")[x]
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
    }

    pub fn lattice(&self) -> bool {
        self.pairs().all(|(x, y)| self.join(x, y).is_some() && self.meet(x, y).is_some())
    }

    /// First failing triple of the lower modular law, if any.
    pub fn modular_lower_witness(&self) -> Option<(usize, usize, usize)> {
        self.triples().find(|&(x, y, z)| {
            self.le[x][z] && self.lower(self.u(&[x, y]) | bit(z)) != self.lower(self.upper(self.l(&[y, z]) | bit(x)))
        })
    }

    pub fn modular_upper_witness(&self) -> Option<(usize, usize, usize)> {
        self.triples().find(|&(x, y, z)| {
            self.le[x][z] && self.upper(self.l(&[y, z]) | bit(x)) != self.upper(self.lower(self.u(&[x, y]) | bit(z)))
        })
    }

    pub fn modular(&self) -> bool {
        self.modular_lower_witness().is_none() && self.modular_upper_witness().is_none()
    }

    pub fn distributive(&self) -> bool {
        self.triples().all(|(x, y, z)| {
            self.lower(self.u(&[x, y]) | bit(z)) == self.lower(self.upper(self.l(&[x, z]) | self.l(&[y, z])))
                && self.upper(self.l(&[x, y]) | bit(z)) == self.upper(self.lower(self.u(&[x, z]) | self.u(&[y, z])))
        })
    }

    pub fn antitone_involution(&self) -> bool {
        let Some(c) = &self.comp else { return false };
        (0..self.n).all(|x| c[c[x]] == x) && self.pairs().all(|(x, y)| !self.le[x][y] || self.le[c[y]][c[x]])
    }

    pub fn complementation(&self) -> bool {
        let (Some(b), Some(t)) = (self.bottom(), self.top()) else { return false };
        self.antitone_involution()
            && (0..self.n).all(|x| self.l(&[x, self.c(x)]) == bit(b) && self.u(&[x, self.c(x)]) == bit(t))
    }

    pub fn boolean(&self) -> bool {
        self.complementation() && self.distributive()
    }

    pub fn pseudo_boolean(&self) -> bool {
        self.complementation()
            && self.pairs().all(|(x, y)| {
                let yc = self.c(y);
                self.lower(self.u(&[x, y]) | bit(yc)) == self.l(&[x, yc])
                    && self.upper(self.l(&[x, y]) | bit(yc)) == self.u(&[x, yc])
            })
    }

    pub fn pseudo_orthomodular(&self) -> bool {
        self.complementation()
            && self.pairs().all(|(x, y)| {
                let yc = self.c(y);
                self.lower(self.upper(self.l(&[x, y]) | bit(yc)) | bit(y)) == self.l(&[x, y])
                    && self.upper(self.lower(self.u(&[x, y]) | bit(yc)) | bit(y)) == self.u(&[x, y])
            })
    }

    pub fn orthogonal(&self) -> bool {
        self.complementation() && self.pairs().all(|(x, y)| !self.le[x][self.c(y)] || self.join(x, y).is_some())
    }

    /// Orthogonal and both orthomodular laws wherever their outer operation
    /// exists. `None` if an inner operation is missing.
    pub fn orthomodular(&self) -> Option<bool> {
        if !self.orthogonal() {
            return Some(false);
        }
        for (x, y) in self.pairs() {
            if let Some(m) = self.meet(x, y) {
                let j = self.join(m, self.c(y))?;
                if self.meet(j, y)? != m {
                    return Some(false);
                }
            }
            if let Some(j) = self.join(x, y) {
                let m = self.meet(j, self.c(y))?;
                if self.join(m, y)? != j {
                    return Some(false);
                }
            }
        }
        Some(true)
    }

    pub fn rpc(&self, a: usize, b: usize) -> Option<usize> {
        let cands = (0..self.n).filter(|&c| self.l(&[a, c]) & !self.l(&[b]) == 0).fold(0, |m, c| m | bit(c));
        self.greatest_in(cands)
    }

    pub fn relatively_pseudocomplemented(&self) -> bool {
        self.pairs().all(|(a, b)| self.rpc(a, b).is_some())
    }
}

/// Random bounded poset: `0`, `m` interior elements related by the
/// upper-triangular bits of `edges`, and `1`.
pub fn bounded(m: usize, edges: &[bool], comp: Option<Vec<usize>>) -> FinitePoset {
    let n = m + 2;
    let mut pairs: Vec<(usize, usize)> = (1..n).map(|x| (0, x)).chain((0..n - 1).map(|x| (x, n - 1))).collect();
    let mut k = 0;
    for i in 0..m {
        for j in i + 1..m {
            if edges[k % edges.len().max(1)] {
                pairs.push((i + 1, j + 1));
            }
            k += 1;
        }
    }
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let p = FinitePoset::from_indices("random", names, &pairs).unwrap();
    match comp {
        Some(c) => p.with_unary(posetlab::UnaryMap::new(c)).unwrap(),
        None => p,
    }
}

/// Involution on `n` points built by pairing off a shuffled prefix.
pub fn involution(n: usize, order: &[usize], fixed: usize) -> Vec<usize> {
    let mut c: Vec<usize> = (0..n).collect();
    let paired = n - fixed.min(n);
    for pair in order[..paired - paired % 2].chunks(2) {
        c[pair[0]] = pair[1];
        c[pair[1]] = pair[0];
    }
    c
}
