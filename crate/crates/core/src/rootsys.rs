//! Type A root system combinatorics.
//!
//! Roots are `e_i - e_j` with 1-based indices `i != j` in `1..=n+1`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Hard cap on the rank for Weyl group searches.
pub const MAX_RANK: usize = 6;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i != j && i > 0 && j > 0, "invalid root ({i},{j})");
        Root { i, j }
    }

    /// The simple root `alpha_k = e_k - e_{k+1}`.
    pub fn simple(k: usize) -> Self {
        Root::new(k, k + 1)
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn neg(&self) -> Self {
        Root { i: self.j, j: self.i }
    }

    /// Coordinates in `Z^{n+1}`.
    pub fn coords(&self, n: usize) -> Vec<i32> {
        let mut v = vec![0; n + 1];
        v[self.i - 1] += 1;
        v[self.j - 1] -= 1;
        v
    }

    /// `self + other` when it is again a root.
    pub fn add(&self, other: &Root) -> Option<Root> {
        if self.j == other.i && self.i != other.j {
            Some(Root::new(self.i, other.j))
        } else if other.j == self.i && other.i != self.j {
            Some(Root::new(other.i, self.j))
        } else {
            None
        }
    }

    /// Pairing `<v, self>` against a vector indexed from 0.
    pub fn pair(&self, v: &[i32]) -> i32 {
        v[self.i - 1] - v[self.j - 1]
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i, self.j)
    }
}

/// All roots: positive roots in convex order, then their negatives.
pub fn all_roots(n: usize) -> Vec<Root> {
    let pos = convex_order(n);
    let neg: Vec<Root> = pos.iter().map(|r| r.neg()).collect();
    pos.into_iter().chain(neg).collect()
}

pub fn positive_roots(n: usize) -> Vec<Root> {
    convex_order(n)
}

/// The reduced word `s_1..s_n s_1..s_{n-1} ... s_1` for the longest element.
pub fn longest_word(n: usize) -> Vec<usize> {
    let mut w = Vec::with_capacity(n * (n + 1) / 2);
    for top in (1..=n).rev() {
        w.extend(1..=top);
    }
    w
}

/// A permutation of `1..=n+1`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..=n).collect())
    }

    pub fn reflection(n: usize, k: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(k - 1, k);
        p
    }

    /// `self * other` (apply `other` first).
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (a, &b) in self.0.iter().enumerate() {
            inv[b] = a;
        }
        Perm(inv)
    }

    pub fn act(&self, r: &Root) -> Root {
        Root::new(self.0[r.i - 1] + 1, self.0[r.j - 1] + 1)
    }

    pub fn length(&self) -> usize {
        let p = &self.0;
        let mut c = 0;
        for a in 0..p.len() {
            for b in a + 1..p.len() {
                if p[a] > p[b] {
                    c += 1;
                }
            }
        }
        c
    }
}

/// All of `S_{n+1}` in lexicographic order.
pub fn weyl_group(n: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
        if prefix.len() == used.len() {
            out.push(Perm(prefix.clone()));
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n + 1], &mut out);
    out
}

/// Positive roots in the order induced by [`longest_word`], computed from
/// `beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k})`.
pub fn convex_order(n: usize) -> Vec<Root> {
    let word = longest_word(n);
    let mut w = Perm::identity(n);
    let mut out = Vec::with_capacity(word.len());
    for &i in &word {
        out.push(w.act(&Root::simple(i)));
        w = w.compose(&Perm::reflection(n, i));
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Base(pub Vec<Root>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("no adapted base")]
    NoAdaptedBase,
    #[error("rank {0} exceeds the supported maximum")]
    RankTooLarge(usize),
}

impl Base {
    pub fn standard(n: usize) -> Self {
        Base((1..=n).map(Root::simple).collect())
    }

    /// Expansion coefficients of `r` in this base, when they exist with a uniform sign.
    pub fn expand(&self, r: &Root, n: usize) -> Option<Vec<i32>> {
        let target = r.coords(n);
        let k = self.0.len();
        let vecs: Vec<Vec<i32>> = self.0.iter().map(|b| b.coords(n)).collect();
        for sign in [1i32, -1] {
            for mask in 1u32..(1 << k) {
                let mut sum = vec![0; n + 1];
                for (t, v) in vecs.iter().enumerate() {
                    if mask & (1 << t) != 0 {
                        for (s, x) in sum.iter_mut().zip(v) {
                            *s += sign * x;
                        }
                    }
                }
                if sum == target {
                    return Some((0..k).map(|t| if mask & (1 << t) != 0 { sign } else { 0 }).collect());
                }
            }
        }
        None
    }

    /// Checks the base property by expanding every root.
    pub fn is_base(&self, n: usize) -> bool {
        self.0.len() == n && all_roots(n).iter().all(|r| self.expand(r, n).is_some())
    }

    /// Roots that are nonnegative combinations of this base.
    pub fn positive_roots(&self, n: usize) -> Vec<Root> {
        all_roots(n)
            .into_iter()
            .filter(|r| self.expand(r, n).map(|c| c.iter().all(|&x| x >= 0)).unwrap_or(false))
            .collect()
    }
}

/// Searches the Weyl images of the standard base for one with `n_a` inside its
/// positive system and every base root outside `n_a` positive in the usual sense.
/// Returns the lexicographically least such base.
pub fn find_adapted_base(n: usize, n_a: &[Root], n_s: &[Root], t_s: &[Root]) -> Result<Base, RootError> {
    if n > MAX_RANK {
        return Err(RootError::RankTooLarge(n));
    }
    let symmetric = |s: &[Root]| s.iter().all(|r| s.contains(&r.neg()));
    if !symmetric(n_s) || !symmetric(t_s) {
        return Err(RootError::NoAdaptedBase);
    }
    let std = Base::standard(n);
    let mut best: Option<Base> = None;
    for w in weyl_group(n) {
        let b = Base(std.0.iter().map(|r| w.act(r)).collect());
        let winv = w.inverse();
        let in_pos = |r: &Root| winv.act(r).is_positive();
        if !n_a.iter().all(in_pos) {
            continue;
        }
        if !b.0.iter().all(|r| n_a.contains(r) || r.is_positive()) {
            continue;
        }
        let mut key = b.clone();
        key.0.sort();
        let better = match &best {
            None => true,
            Some(cur) => {
                let mut ck = cur.clone();
                ck.0.sort();
                key.0 < ck.0
            }
        };
        if better {
            best = Some(b);
        }
    }
    let b = best.ok_or(RootError::NoAdaptedBase)?;
    debug_assert!(b.is_base(n));
    Ok(b)
}

/// Whether a set of roots is closed under addition within the root system.
pub fn is_closed(set: &[Root]) -> bool {
    for a in set {
        for b in set {
            if let Some(s) = a.add(b) {
                if !set.contains(&s) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convex_orders() {
        assert_eq!(convex_order(1), vec![Root::new(1, 2)]);
        assert_eq!(convex_order(2), vec![Root::new(1, 2), Root::new(1, 3), Root::new(2, 3)]);
        for n in 1..=5 {
            let c = convex_order(n);
            assert_eq!(c.len(), n * (n + 1) / 2);
            let mut sorted = c.clone();
            sorted.sort();
            assert_eq!(c, sorted);
            sorted.dedup();
            assert_eq!(sorted.len(), c.len());
        }
    }

    #[test]
    fn weyl_group_sizes() {
        assert_eq!(weyl_group(2).len(), 6);
        assert_eq!(weyl_group(3).len(), 24);
        let w0: Perm = longest_word(3)
            .iter()
            .fold(Perm::identity(3), |acc, &i| acc.compose(&Perm::reflection(3, i)));
        assert_eq!(w0.length(), 6);
    }

    #[test]
    fn adapted_bases() {
        let phi = all_roots(2);
        assert_eq!(find_adapted_base(2, &[], &[], &phi).unwrap(), Base::standard(2));
        assert_eq!(find_adapted_base(2, &[], &phi, &[]).unwrap(), Base::standard(2));
        let n_a = [Root::new(1, 3), Root::new(2, 3)];
        let t_s = [Root::new(1, 2), Root::new(2, 1)];
        let b = find_adapted_base(2, &n_a, &[], &t_s).unwrap();
        assert!(b.0.contains(&Root::new(2, 3)) && b.0.contains(&Root::new(1, 2)));
        assert!(b.is_base(2));
    }

    #[test]
    fn standard_base_expansion() {
        let b = Base::standard(3);
        assert_eq!(b.expand(&Root::new(1, 4), 3), Some(vec![1, 1, 1]));
        assert_eq!(b.expand(&Root::new(3, 2), 3), Some(vec![0, -1, 0]));
        assert_eq!(b.positive_roots(3), convex_order(3));
    }
}
