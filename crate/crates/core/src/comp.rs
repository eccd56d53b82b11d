//! Partitions, bipartitions and signed compositions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{GenElem, SignedPerm};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidBip(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn transpose(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// Multiplicity of each part value, indexed from 1.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// All partitions of `m`, in decreasing lexicographic order.
    pub fn all(m: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A bipartition `λ = (λ^+, λ^-)`; labels both conjugacy classes and
/// irreducible characters of W_n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bip {
    pub plus: Partition,
    pub minus: Partition,
}

impl Bip {
    pub fn new(plus: Partition, minus: Partition) -> Self {
        Bip { plus, minus }
    }

    pub fn size(&self) -> usize {
        self.plus.size() + self.minus.size()
    }

    /// `λ̂`: the parts of `λ^+` followed by the negated parts of `λ^-`.
    pub fn hat(&self) -> SComp {
        let mut parts: Vec<i32> = self.plus.parts().iter().map(|&p| p as i32).collect();
        parts.extend(self.minus.parts().iter().map(|&p| -(p as i32)));
        SComp(parts)
    }

    /// `λ^∨ = (λ^-, λ^+)`.
    pub fn dual(&self) -> Bip {
        Bip::new(self.minus.clone(), self.plus.clone())
    }

    /// `λ^* = (λ^+, ᵗλ^-)`.
    pub fn star(&self) -> Bip {
        Bip::new(self.plus.clone(), self.minus.transpose())
    }

    /// Inverse of [`Bip::star`].
    pub fn unstar(&self) -> Bip {
        self.star()
    }

    /// Bip(n) ordered by decreasing `|λ^+|`, then decreasing `λ^+`, then decreasing `λ^-`.
    pub fn all(n: usize) -> Vec<Bip> {
        let mut out = Vec::new();
        for k in (0..=n).rev() {
            for plus in Partition::all(k) {
                for minus in Partition::all(n - k) {
                    out.push(Bip::new(plus.clone(), minus));
                }
            }
        }
        out
    }
}

impl fmt::Display for Bip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.plus, self.minus)
    }
}

impl FromStr for Bip {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("bipartition `{s}` lacks `|`")))?;
        Ok(Bip::new(a.parse()?, b.parse()?))
    }
}

/// A signed composition `C = (c_1, …, c_r)` of `n = Σ|c_i|`.
///
/// Part `c_i` owns the block `I_C^{(i)}` of consecutive integers. On a
/// positive block `W_C` acts by all signed permutations, on a negative block
/// by unsigned permutations only.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SComp(Vec<i32>);

impl SComp {
    pub fn new(parts: Vec<i32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidComp(format!("{parts:?}")));
        }
        Ok(SComp(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<i32>) -> Self {
        SComp(parts)
    }

    /// Builds a composition after dropping zero parts.
    pub fn from_parts_dropping_zeros(parts: impl IntoIterator<Item = i32>) -> Result<Self> {
        SComp::new(parts.into_iter().filter(|&p| p != 0).collect())
    }

    pub fn parts(&self) -> &[i32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().map(|p| p.unsigned_abs() as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `C^+ = (|c_1|, …, |c_r|)`.
    pub fn plus(&self) -> SComp {
        SComp(self.0.iter().map(|p| p.abs()).collect())
    }

    /// `C^- = -C^+`.
    pub fn minus(&self) -> SComp {
        SComp(self.0.iter().map(|p| -p.abs()).collect())
    }

    /// `C̄ = -C`.
    pub fn bar(&self) -> SComp {
        SComp(self.0.iter().map(|p| -p).collect())
    }

    /// Concatenation `C ⊔ D`.
    pub fn concat(&self, other: &SComp) -> SComp {
        SComp(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    pub fn is_parabolic(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p < 0)
    }

    pub fn is_semi_positive(&self) -> bool {
        self.0.iter().all(|&p| p >= -1)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&p| p < 0)
    }

    /// `𝝀(C)`: positive parts sorted into `λ^+`, absolute values of negative parts into `λ^-`.
    pub fn bip(&self) -> Bip {
        let plus = self.0.iter().filter(|&&p| p > 0).map(|&p| p as usize).collect();
        let minus = self.0.iter().filter(|&&p| p < 0).map(|&p| (-p) as usize).collect();
        Bip::new(Partition::from_unsorted(plus), Partition::from_unsorted(minus))
    }

    /// Blocks `I_C^{(i)}` as `(first, last, positive)`, 1-based inclusive.
    pub fn blocks(&self) -> Vec<(usize, usize, bool)> {
        let mut start = 1;
        self.0
            .iter()
            .map(|&p| {
                let len = p.unsigned_abs() as usize;
                let b = (start, start + len - 1, p > 0);
                start += len;
                b
            })
            .collect()
    }

    /// Block index of each position `1..=n` (index 0 unused).
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![usize::MAX];
        for (k, (a, b, _)) in self.blocks().into_iter().enumerate() {
            out.extend(std::iter::repeat_n(k, b - a + 1));
        }
        out
    }

    /// `S_C`: the Coxeter generators of `W_C` (the `s_p` inside each block and `t` at
    /// the first position of each positive block).
    pub fn generators(&self) -> BTreeSet<GenElem> {
        let mut out = BTreeSet::new();
        for (a, b, pos) in self.blocks() {
            out.extend((a..b).map(GenElem::S));
            if pos {
                out.insert(GenElem::T(a));
            }
        }
        out
    }

    /// `S'_C = S'_n ∩ W_C`.
    pub fn reflections(&self) -> BTreeSet<GenElem> {
        let mut out = BTreeSet::new();
        for (a, b, pos) in self.blocks() {
            out.extend((a..b).map(GenElem::S));
            if pos {
                out.extend((a..=b).map(GenElem::T));
            }
        }
        out
    }

    /// `A_C = {s_{|c_1|+…+|c_i|} : c_i < 0 < c_{i+1}}`.
    pub fn a_set(&self) -> BTreeSet<GenElem> {
        let blocks = self.blocks();
        blocks
            .windows(2)
            .filter(|w| !w[0].2 && w[1].2)
            .map(|w| GenElem::S(w[0].1))
            .collect()
    }

    /// `𝒜_C = S'_C ⊔ A_C`.
    pub fn ascents(&self) -> BTreeSet<GenElem> {
        let mut out = self.reflections();
        out.extend(self.a_set());
        out
    }

    /// Whether `w ∈ W_C`, i.e. `w` stabilizes every block (positive blocks up
    /// to sign, negative blocks with positive images).
    pub fn contains(&self, w: &SignedPerm) -> bool {
        if w.n() != self.n() {
            return false;
        }
        let block = self.block_of();
        let blocks = self.blocks();
        w.window().iter().enumerate().all(|(i, &x)| {
            let k = block[i + 1];
            block[x.unsigned_abs() as usize] == k && (blocks[k].2 || x > 0)
        })
    }

    /// `|W_C| = Π 2^{[c_i>0]} |c_i|!`.
    pub fn subgroup_order(&self) -> usize {
        self.0
            .iter()
            .map(|&p| {
                let k = p.unsigned_abs() as usize;
                let f: usize = (1..=k).product();
                if p > 0 {
                    f << k
                } else {
                    f
                }
            })
            .product()
    }

    /// All signed compositions of `n`.
    ///
    /// Order: a ternary counter `(d_0, d_1, …, d_{n-1})` read lexicographically,
    /// where `d_0 ∈ {+, −}` is the sign of the first part and, for each later
    /// position, `d_i ∈ {join, new positive part, new negative part}`.
    pub fn all(n: usize) -> Vec<SComp> {
        if n == 0 {
            return Vec::new();
        }
        let mut out = Vec::with_capacity(2 * 3usize.pow(n as u32 - 1));
        let total = 2 * 3usize.pow(n as u32 - 1);
        for code in 0..total {
            // most significant digit is the first sign
            let mut digits = vec![0usize; n];
            let mut c = code;
            for i in (1..n).rev() {
                digits[i] = c % 3;
                c /= 3;
            }
            digits[0] = c;
            let mut parts: Vec<i32> = vec![if digits[0] == 0 { 1 } else { -1 }];
            for &d in &digits[1..] {
                match d {
                    0 => {
                        let last = parts.last_mut().unwrap();
                        *last += last.signum();
                    }
                    1 => parts.push(1),
                    _ => parts.push(-1),
                }
            }
            out.push(SComp(parts));
        }
        out
    }

    /// Compositions `E` with `self ←B E`: each negative part `−k` is replaced by
    /// `(−a, b)` with `a + b = k` (zero parts dropped); positive parts are kept.
    pub fn b_refinements(&self) -> Vec<SComp> {
        let mut acc: Vec<Vec<i32>> = vec![Vec::new()];
        for &c in &self.0 {
            if c > 0 {
                acc.iter_mut().for_each(|v| v.push(c));
                continue;
            }
            let k = -c;
            let mut next = Vec::new();
            for v in &acc {
                for b in 0..=k {
                    let mut u = v.clone();
                    if k - b > 0 {
                        u.push(-(k - b));
                    }
                    if b > 0 {
                        u.push(b);
                    }
                    next.push(u);
                }
            }
            acc = next;
        }
        acc.into_iter().map(SComp).collect()
    }

    /// Whether `self ←R other`: `other` arises by merging runs of consecutive
    /// parts of equal sign.
    pub fn r_coarsens_to(&self, other: &SComp) -> bool {
        let mut it = self.0.iter().peekable();
        for &d in &other.0 {
            let mut sum: i32 = 0;
            while sum.abs() < d.abs() {
                match it.next() {
                    Some(&e) if e.signum() == d.signum() => sum += e,
                    _ => return false,
                }
            }
            if sum != d {
                return false;
            }
        }
        it.peek().is_none()
    }

    /// Whether `self ← other`, decided by `S_C ⊆ 𝒜_D`.
    pub fn left_arrow(&self, other: &SComp) -> bool {
        self.n() == other.n() && self.generators().is_subset(&other.ascents())
    }

    /// The unique `E` with `self ←B E ←R other` when `self ← other`.
    pub fn refinement(&self, other: &SComp) -> Result<Option<SComp>> {
        crate::error::check_size(self.n(), other.n())?;
        Ok(self.b_refinements().into_iter().find(|e| e.r_coarsens_to(other)))
    }

    /// Whether `W_self ⊆ W_other`, tested on the reflections `S'_C`.
    pub fn is_subcomp_of(&self, other: &SComp) -> bool {
        let n = self.n();
        n == other.n()
            && self
                .reflections()
                .into_iter()
                .all(|r| other.contains(&r.to_perm(n).expect("in range")))
    }
}

impl fmt::Display for SComp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for SComp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for SComp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|t| t.trim().parse::<i32>().map_err(|_| Error::Parse(format!("bad part `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        SComp::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use GenElem::{S, T};

    fn c(s: &str) -> SComp {
        s.parse().unwrap()
    }

    #[test]
    fn comp_counts() {
        assert_eq!(SComp::all(1), vec![c("1"), c("-1")]);
        for n in 1..=8 {
            let all = SComp::all(n);
            assert_eq!(all.len(), 2 * 3usize.pow(n as u32 - 1));
            let set: BTreeSet<_> = all.iter().collect();
            assert_eq!(set.len(), all.len());
            assert!(all.iter().all(|x| x.n() == n));
        }
        let two: Vec<String> = SComp::all(2).iter().map(|x| x.to_string()).collect();
        assert_eq!(two, ["2", "1,1", "1,-1", "-2", "-1,1", "-1,-1"]);
    }

    #[test]
    fn stats_examples() {
        assert_eq!(c("1,-3,-1,2,-1,1").a_set(), [S(5), S(8)].into_iter().collect());
        let g: BTreeSet<_> = [S(1), T(3), S(3), S(4), S(7), S(8), T(10)].into_iter().collect();
        assert_eq!(c("-2,3,-1,-3,1").generators(), g);
        assert_eq!(c("3").bip().to_string(), "3|");
        assert_eq!(c("2,-1,1,-2").bip().to_string(), "2,1|2,1");
    }

    #[test]
    fn b_refinement_example() {
        let got: BTreeSet<SComp> = c("1,-2,-1").b_refinements().into_iter().collect();
        let want: BTreeSet<SComp> = ["1,-2,-1", "1,-1,1,-1", "1,-1,1,1", "1,2,-1", "1,-2,1", "1,2,1"]
            .iter()
            .map(|s| c(s))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn left_arrow_example_has_twelve() {
        let cc = c("1,-2,-1");
        let got: BTreeSet<SComp> = SComp::all(4).into_iter().filter(|d| cc.left_arrow(d)).collect();
        let want: BTreeSet<SComp> = [
            "1,-2,-1", "1,-3", "1,-1,1,-1", "1,-1,1,1", "1,-1,2", "1,2,-1", "3,-1", "1,-2,1",
            "1,2,1", "3,1", "1,3", "4",
        ]
        .iter()
        .map(|s| c(s))
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn refinement_agrees_with_left_arrow() {
        for n in 1..=4 {
            for x in SComp::all(n) {
                assert_eq!(x.refinement(&x).unwrap(), Some(x.clone()));
                for y in SComp::all(n) {
                    let cands: Vec<_> = x.b_refinements().into_iter().filter(|e| e.r_coarsens_to(&y)).collect();
                    assert!(cands.len() <= 1);
                    assert_eq!(x.left_arrow(&y), !cands.is_empty(), "{x} {y}");
                }
            }
        }
    }

    #[test]
    fn partitions_and_bips() {
        assert_eq!(Partition::all(4).len(), 5);
        let b: Vec<String> = Bip::all(2).iter().map(|b| b.to_string()).collect();
        assert_eq!(b, ["2|", "1,1|", "1|1", "|2", "|1,1"]);
        assert_eq!(Bip::all(3).len(), 10);
        let l: Bip = "2,1|2,1,1".parse().unwrap();
        assert_eq!(l.star().to_string(), "2,1|3,1");
        assert_eq!(l.star().unstar(), l);
        assert_eq!(l.hat().to_string(), "2,1,-2,-1,-1");
        assert_eq!(l.hat().bip(), l);
    }

    #[test]
    fn subgroup_membership() {
        let cc = c("1,1");
        let members: Vec<_> = SignedPerm::all(2).into_iter().filter(|w| cc.contains(w)).collect();
        assert_eq!(members.len(), 4);
        assert_eq!(cc.subgroup_order(), 4);
        assert!(c("-1,-1").is_subcomp_of(&c("-2")));
        assert!(!c("1,1").is_subcomp_of(&c("-2")));
    }

    #[test]
    fn parsing_rejects_zero() {
        assert!("1,0".parse::<SComp>().is_err());
        assert!("".parse::<SComp>().is_err());
    }
}
