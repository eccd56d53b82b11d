//! Signed permutations of `[1, n]` in window notation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::comp::{Bip, Partition, SComp};
use crate::error::{check_size, Error, Result};

/// A signed permutation `w` of `[1, n]`, stored as its window `(w(1), …, w(n))`.
///
/// The extension `w(-i) = -w(i)` makes it a bijection of `±[1, n]`.
/// Products are right-to-left composition: `(u∘v)(i) = u(v(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPerm {
    window: Vec<i32>,
}

/// A Coxeter-type generator of W_n: `s_i` swaps `i` and `i+1`, `t_j` negates `j`.
///
/// `t_1` together with the `s_i` is the Coxeter generating set; the other
/// `t_j` are the extra reflections making up `S'_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenElem {
    S(usize),
    T(usize),
}

impl GenElem {
    pub fn to_perm(self, n: usize) -> Result<SignedPerm> {
        match self {
            GenElem::S(i) if i >= 1 && i < n => {
                let mut w: Vec<i32> = (1..=n as i32).collect();
                w.swap(i - 1, i);
                Ok(SignedPerm { window: w })
            }
            GenElem::T(j) if j >= 1 && j <= n => {
                let mut w: Vec<i32> = (1..=n as i32).collect();
                w[j - 1] = -w[j - 1];
                Ok(SignedPerm { window: w })
            }
            g => Err(Error::Precondition(format!("generator {g} out of range for n = {n}"))),
        }
    }

    /// `S'_n = {s_1, …, s_{n-1}} ∪ {t_1, …, t_n}`.
    pub fn all(n: usize) -> Vec<GenElem> {
        let mut v: Vec<GenElem> = (1..n).map(GenElem::S).collect();
        v.extend((1..=n).map(GenElem::T));
        v
    }
}

impl fmt::Display for GenElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenElem::S(i) => write!(f, "s{i}"),
            GenElem::T(j) => write!(f, "t{j}"),
        }
    }
}

impl FromStr for GenElem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad generator `{s}`"));
        let (kind, idx) = s.split_at(1.min(s.len()));
        let idx: usize = idx.parse().map_err(|_| bad())?;
        match kind {
            "s" => Ok(GenElem::S(idx)),
            "t" => Ok(GenElem::T(idx)),
            _ => Err(bad()),
        }
    }
}

impl SignedPerm {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        if window.is_empty() {
            return Err(Error::InvalidPerm("empty window".into()));
        }
        Self::new_allow_empty(window)
    }

    /// Like [`SignedPerm::new`] but admits the empty permutation of grade 0.
    pub fn new_allow_empty(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidPerm(format!("{window:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPerm { window })
    }

    pub(crate) fn from_window_unchecked(window: Vec<i32>) -> Self {
        SignedPerm { window }
    }

    /// The empty permutation, unit of the Hopf algebra.
    pub fn empty() -> Self {
        SignedPerm { window: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm { window: (1..=n as i32).collect() }
    }

    /// `w_n = -1`, the longest element.
    pub fn longest(n: usize) -> Self {
        SignedPerm { window: (1..=n as i32).map(|i| -i).collect() }
    }

    /// `σ_n`, the longest element of the symmetric group: `i ↦ n+1-i`.
    pub fn sigma_longest(n: usize) -> Self {
        SignedPerm { window: (1..=n as i32).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &x)| x == i as i32 + 1)
    }

    /// Image of `i ∈ ±[1, n]`.
    pub fn apply(&self, i: i32) -> i32 {
        if i > 0 {
            self.window[i as usize - 1]
        } else {
            -self.window[(-i) as usize - 1]
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPerm) -> Result<SignedPerm> {
        check_size(self.n(), other.n())?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &SignedPerm) -> SignedPerm {
        SignedPerm { window: other.window.iter().map(|&v| self.apply(v)).collect() }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut inv = vec![0i32; self.n()];
        for (i, &x) in self.window.iter().enumerate() {
            let pos = i as i32 + 1;
            inv[x.unsigned_abs() as usize - 1] = if x > 0 { pos } else { -pos };
        }
        SignedPerm { window: inv }
    }

    /// Coxeter length, counting positive roots `2e_i`, `e_j ± e_i` sent to negative roots.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut len = self.t_length();
        for j in 0..w.len() {
            for i in 0..j {
                if w[i] > w[j] {
                    len += 1;
                }
                if w[i] + w[j] < 0 {
                    len += 1;
                }
            }
        }
        len
    }

    /// Number of negative window entries.
    pub fn t_length(&self) -> usize {
        self.window.iter().filter(|&&x| x < 0).count()
    }

    /// `(ℓ(w), ℓ_t(w))`.
    pub fn lengths(&self) -> (usize, usize) {
        (self.length(), self.t_length())
    }

    pub fn s_length(&self) -> usize {
        self.length() - self.t_length()
    }

    /// The factor `w_S ∈ S_n` in `w = w_S w_T`: the underlying unsigned permutation.
    pub fn s_part(&self) -> SignedPerm {
        SignedPerm { window: self.window.iter().map(|x| x.abs()).collect() }
    }

    /// The factor `w_T` (a product of `t_j`) in `w = w_S w_T`.
    pub fn t_part(&self) -> SignedPerm {
        SignedPerm {
            window: self
                .window
                .iter()
                .enumerate()
                .map(|(i, &x)| if x < 0 { -(i as i32 + 1) } else { i as i32 + 1 })
                .collect(),
        }
    }

    /// Whether `ℓ(wr) > ℓ(w)` for the reflection `r`.
    pub fn is_ascent(&self, r: GenElem) -> bool {
        match r {
            GenElem::S(i) => self.window[i - 1] < self.window[i],
            GenElem::T(j) => self.window[j - 1] > 0,
        }
    }

    /// `𝒰'_n(w) = {r ∈ S'_n : ℓ(wr) > ℓ(w)}`.
    pub fn ascent_set(&self) -> BTreeSet<GenElem> {
        GenElem::all(self.n()).into_iter().filter(|&r| self.is_ascent(r)).collect()
    }

    /// The complement `S'_n ∖ 𝒰'_n(w)`.
    pub fn descent_set(&self) -> BTreeSet<GenElem> {
        GenElem::all(self.n()).into_iter().filter(|&r| !self.is_ascent(r)).collect()
    }

    /// `𝐂(w)`: lengths of maximal increasing constant-sign runs of the window,
    /// each signed by the sign of its entries.
    pub fn descent_composition(&self) -> SComp {
        let w = &self.window;
        let mut parts = Vec::new();
        let mut start = 0;
        for i in 1..=w.len() {
            let breaks = i == w.len() || (w[i] > 0) != (w[i - 1] > 0) || w[i - 1] > w[i];
            if breaks {
                let len = (i - start) as i32;
                parts.push(if w[start] > 0 { len } else { -len });
                start = i;
            }
        }
        SComp::from_parts_unchecked(parts)
    }

    /// Conjugacy class label: negative cycles of `|w|` (sign product −1) form
    /// `λ^+`, positive cycles form `λ^-`.
    pub fn cycle_type(&self) -> Bip {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut negative = false;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                let x = self.window[i];
                negative ^= x < 0;
                i = x.unsigned_abs() as usize - 1;
            }
            if negative {
                plus.push(len);
            } else {
                minus.push(len);
            }
        }
        Bip::new(Partition::from_unsorted(plus), Partition::from_unsorted(minus))
    }

    /// `u × v ∈ W_{n+m}`: `u` on `[1, n]`, `v` shifted onto `[n+1, n+m]`.
    pub fn cross(&self, other: &SignedPerm) -> SignedPerm {
        let n = self.n() as i32;
        let mut window = self.window.clone();
        window.extend(other.window.iter().map(|&x| if x > 0 { x + n } else { x - n }));
        SignedPerm { window }
    }

    /// Every element of W_n, in lexicographic order of windows.
    pub fn all(n: usize) -> Vec<SignedPerm> {
        use itertools::Itertools;
        let mut out = Vec::with_capacity(crate::group::order(n));
        for p in (1..=n as i32).permutations(n) {
            for mask in 0..(1u32 << n) {
                let window = p
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
                    .collect();
                out.push(SignedPerm { window });
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.window.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.window.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for SignedPerm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "∅" || s.is_empty() {
            return Ok(SignedPerm::empty());
        }
        let window = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("bad window entry `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        SignedPerm::new(window)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, VecDeque};

    fn p(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    fn bfs_lengths(n: usize) -> HashMap<SignedPerm, usize> {
        let gens: Vec<SignedPerm> = std::iter::once(GenElem::T(1))
            .chain((1..n).map(GenElem::S))
            .map(|g| g.to_perm(n).unwrap())
            .collect();
        let mut dist = HashMap::new();
        let mut queue = VecDeque::new();
        dist.insert(SignedPerm::identity(n), 0);
        queue.push_back(SignedPerm::identity(n));
        while let Some(w) = queue.pop_front() {
            let d = dist[&w];
            for g in &gens {
                let u = w.compose(g).unwrap();
                if !dist.contains_key(&u) {
                    dist.insert(u.clone(), d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    #[test]
    fn composition_follows_function_order() {
        let s = GenElem::S(1).to_perm(2).unwrap();
        let t = GenElem::T(1).to_perm(2).unwrap();
        assert_eq!(s.compose(&t).unwrap(), p("-2 1"));
        assert!(t.compose(&t).unwrap().is_identity());
        let w = p("-2 1");
        assert_eq!(SignedPerm::identity(2).compose(&w).unwrap(), w);
        assert!(p("1 2").compose(&p("1 2 3")).is_err());
    }

    #[test]
    fn lengths_of_named_elements() {
        assert_eq!(SignedPerm::identity(3).lengths(), (0, 0));
        assert_eq!(p("-1 -2").lengths(), (4, 2));
        assert_eq!(SignedPerm::longest(4).length(), 16);
    }

    #[test]
    fn root_count_matches_word_length() {
        for n in 1..=4 {
            let dist = bfs_lengths(n);
            assert_eq!(dist.len(), crate::group::order(n));
            for (w, d) in &dist {
                assert_eq!(w.length(), *d, "{w}");
            }
        }
        assert_eq!(bfs_lengths(4)[&p("-2 3 1 -4")], p("-2 3 1 -4").length());
    }

    #[test]
    fn ascents_in_w2() {
        assert_eq!(p("2 -1").ascent_set(), [GenElem::T(1)].into_iter().collect());
        assert_eq!(SignedPerm::identity(2).ascent_set().len(), 3);
        assert!(p("-1 -2").ascent_set().is_empty());
    }

    #[test]
    fn ascent_criterion_matches_length_comparison() {
        for n in 1..=4 {
            for w in SignedPerm::all(n) {
                for r in GenElem::all(n) {
                    let wr = w.compose(&r.to_perm(n).unwrap()).unwrap();
                    assert_eq!(w.is_ascent(r), wr.length() > w.length());
                }
            }
        }
    }

    #[test]
    fn descent_composition_example() {
        let w = p("9 -3 -2 -1 -4 5 8 -6 7");
        assert_eq!(w.descent_composition().to_string(), "1,-3,-1,2,-1,1");
        assert_eq!(SignedPerm::identity(5).descent_composition().to_string(), "5");
    }

    #[test]
    fn cycle_types_in_w2() {
        assert_eq!(p("-1 2").cycle_type().to_string(), "1|1");
        assert_eq!(p("2 1").cycle_type().to_string(), "|2");
        assert_eq!(p("1 2").cycle_type().to_string(), "|1,1");
        assert_eq!(p("-2 1").cycle_type().to_string(), "2|");
    }

    #[test]
    fn inverse_and_parse_roundtrip() {
        for w in SignedPerm::all(3) {
            assert!(w.compose(&w.inverse()).unwrap().is_identity());
            assert_eq!(w.to_string().parse::<SignedPerm>().unwrap(), w);
            assert_eq!(w.s_part().compose(&w.t_part()).unwrap(), w);
        }
        assert!("1 1".parse::<SignedPerm>().is_err());
        assert!("0 1".parse::<SignedPerm>().is_err());
        assert!("1 x".parse::<SignedPerm>().is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        let all = SignedPerm::all(3);
        assert_eq!(all.len(), 48);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
    }
}
