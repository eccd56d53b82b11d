//! Symmetric functions over `W = ℤ/2ℤ`: the ring `Λ(W)` in power sums
//! `p_r(+)`, `p_r(−)`, its Schur basis `s_λ = s_{λ^+}(τ) s_{λ^-}(ε)`, the
//! characteristic map `ch`, and the comparison of `ξ_λ` with Specht's
//! construction.
//!
//! Every basis element is keyed by a pair of partitions stored in a [`Bip`]:
//! - [`Basis::PowerClass`]: `(ρ, σ) ↦ p_ρ(+) p_σ(−)`, where `+` is the class
//!   of cycles with sign product `1`;
//! - [`Basis::PowerChar`]: `(ρ, σ) ↦ p_ρ(τ) p_σ(ε)`;
//! - [`Basis::Schur`]: `λ ↦ s_{λ^+}(τ) s_{λ^-}(ε)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::characters::{self, ClassFn};
use crate::comp::{Bip, Partition, SComp};
use crate::error::{check_envelope, check_size, Error, Result};
use crate::hopf;
use crate::rsk::{self, Bitab, CoplacticElem, Tableau};
use crate::{frac, rat, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Basis {
    PowerClass,
    PowerChar,
    Schur,
}

/// Which of the two characters of `W` a one-variable function is taken at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CharTag {
    Tau,
    Eps,
}

/// An element of `Λ(W)` in a declared basis.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct SymFun {
    pub basis: Basis,
    pub coeffs: BTreeMap<Bip, Rat>,
}

/// `z_μ = Π k^{m_k} m_k!`.
pub fn z_partition(mu: &Partition) -> Rat {
    let mut z = 1i64;
    for (k, &m) in mu.multiplicities().iter().enumerate().skip(1) {
        z *= (k as i64).pow(m as u32) * (1..=m as i64).product::<i64>();
    }
    rat(z)
}

/// Centralizer order `Z_ρ` in `W_n` of the class with positive cycles `ρ^+`
/// and negative cycles `ρ^-`: `Π z_{ρ^±} · 2^{ℓ(ρ^+) + ℓ(ρ^-)}`.
pub fn centralizer_order(positive: &Partition, negative: &Partition) -> Rat {
    z_partition(positive) * z_partition(negative) * rat(1 << (positive.len() + negative.len()))
}

fn merge(a: &Partition, b: &Partition) -> Partition {
    Partition::from_unsorted(a.parts().iter().chain(b.parts()).copied().collect())
}

fn key(a: Partition, b: Partition) -> Bip {
    Bip::new(a, b)
}

impl SymFun {
    pub fn zero(basis: Basis) -> Self {
        SymFun { basis, coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Basis::PowerClass, key(Partition::empty(), Partition::empty()))
    }

    pub fn monomial(basis: Basis, k: Bip) -> Self {
        let mut s = Self::zero(basis);
        s.add_term(k, Rat::one());
        s
    }

    pub fn add_term(&mut self, k: Bip, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(k.clone()).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: &Rat) -> SymFun {
        let mut out = SymFun::zero(self.basis);
        for (m, c) in &self.coeffs {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn add(&self, other: &SymFun) -> SymFun {
        let mut out = self.clone();
        for (m, c) in &other.to_basis(self.basis).coeffs {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymFun) -> SymFun {
        self.add(&other.scale(&-Rat::one()))
    }

    /// Product, computed in the power-sum basis of `self` (class basis for Schur input).
    pub fn mul(&self, other: &SymFun) -> SymFun {
        let b = if self.basis == Basis::Schur { Basis::PowerChar } else { self.basis };
        let (x, y) = (self.to_basis(b), other.to_basis(b));
        let mut out = SymFun::zero(b);
        for (m1, c1) in &x.coeffs {
            for (m2, c2) in &y.coeffs {
                out.add_term(key(merge(&m1.plus, &m2.plus), merge(&m1.minus, &m2.minus)), c1 * c2);
            }
        }
        out.to_basis(self.basis)
    }

    /// Homogeneous component of degree `n`.
    pub fn degree_part(&self, n: usize) -> SymFun {
        SymFun {
            basis: self.basis,
            coeffs: self.coeffs.iter().filter(|(m, _)| m.size() == n).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn to_basis(&self, target: Basis) -> SymFun {
        use Basis::*;
        match (self.basis, target) {
            (a, b) if a == b => self.clone(),
            (PowerClass, PowerChar) => self.map_monomials(target, class_to_char),
            (PowerChar, PowerClass) => self.map_monomials(target, char_to_class),
            (PowerChar, Schur) => self.map_monomials(target, char_to_schur),
            (Schur, PowerChar) => self.map_monomials(target, schur_to_char),
            (PowerClass, Schur) => self.to_basis(PowerChar).to_basis(Schur),
            (Schur, PowerClass) => self.to_basis(PowerChar).to_basis(PowerClass),
            _ => unreachable!(),
        }
    }

    fn map_monomials(&self, target: Basis, f: impl Fn(&Bip) -> Vec<(Bip, Rat)>) -> SymFun {
        let mut out = SymFun::zero(target);
        for (m, c) in &self.coeffs {
            for (k, d) in f(m) {
                out.add_term(k, c * d);
            }
        }
        out
    }

    /// Equality as elements of `Λ(W)`, independent of the stored basis.
    pub fn same_as(&self, other: &SymFun) -> bool {
        self.to_basis(Basis::PowerClass) == other.to_basis(Basis::PowerClass)
    }
}

/// Expands `Π_i (a_i p_{r_i} + b_i p'_{r_i})` over the parts of `mu`.
fn expand_linear(parts: &[usize], a: &Rat, b: &Rat, out: &mut Vec<(Partition, Partition, Rat)>) {
    let mut acc = vec![(Vec::new(), Vec::new(), Rat::one())];
    for &r in parts {
        let mut next = Vec::new();
        for (x, y, c) in acc {
            let mut x1: Vec<usize> = x.clone();
            x1.push(r);
            next.push((x1, y.clone(), &c * a));
            let mut y1: Vec<usize> = y;
            y1.push(r);
            next.push((x, y1, &c * b));
        }
        acc = next;
    }
    out.extend(acc.into_iter().map(|(x, y, c)| (Partition::from_unsorted(x), Partition::from_unsorted(y), c)));
}

fn combine(a: Vec<(Partition, Partition, Rat)>, b: Vec<(Partition, Partition, Rat)>) -> Vec<(Bip, Rat)> {
    let mut out = Vec::new();
    for (x1, y1, c1) in &a {
        for (x2, y2, c2) in &b {
            out.push((key(merge(x1, x2), merge(y1, y2)), c1 * c2));
        }
    }
    out
}

/// `p_r(+) = p_r(τ) + p_r(ε)`, `p_r(−) = p_r(τ) − p_r(ε)`.
fn class_to_char(m: &Bip) -> Vec<(Bip, Rat)> {
    let (mut a, mut b) = (Vec::new(), Vec::new());
    expand_linear(m.plus.parts(), &rat(1), &rat(1), &mut a);
    expand_linear(m.minus.parts(), &rat(1), &rat(-1), &mut b);
    combine(a, b)
}

/// `p_r(τ) = ½(p_r(+) + p_r(−))`, `p_r(ε) = ½(p_r(+) − p_r(−))`.
fn char_to_class(m: &Bip) -> Vec<(Bip, Rat)> {
    let (mut a, mut b) = (Vec::new(), Vec::new());
    expand_linear(m.plus.parts(), &frac(1, 2), &frac(1, 2), &mut a);
    expand_linear(m.minus.parts(), &frac(1, 2), &frac(-1, 2), &mut b);
    combine(a, b)
}

fn chi(mu: &Partition, nu: &Partition) -> i64 {
    characters::symmetric_group_character(mu, nu).expect("same size")
}

/// `p_ν = Σ_μ χ_μ(ν) s_μ` in each variable set.
fn char_to_schur(m: &Bip) -> Vec<(Bip, Rat)> {
    let mut out = Vec::new();
    for a in Partition::all(m.plus.size()) {
        for b in Partition::all(m.minus.size()) {
            let c = chi(&a, &m.plus) * chi(&b, &m.minus);
            if c != 0 {
                out.push((key(a.clone(), b), rat(c)));
            }
        }
    }
    out
}

/// `s_μ = Σ_ν z_ν⁻¹ χ_μ(ν) p_ν` in each variable set.
fn schur_to_char(m: &Bip) -> Vec<(Bip, Rat)> {
    let mut out = Vec::new();
    for a in Partition::all(m.plus.size()) {
        for b in Partition::all(m.minus.size()) {
            let c = chi(&m.plus, &a) * chi(&m.minus, &b);
            if c != 0 {
                let k = rat(c) / (z_partition(&a) * z_partition(&b));
                out.push((key(a.clone(), b), k));
            }
        }
    }
    out
}

fn fmt_factors(parts: &Partition, tag: &str) -> Vec<String> {
    parts.parts().iter().map(|r| format!("p{r}({tag})")).collect()
}

fn monomial_name(basis: Basis, m: &Bip) -> String {
    let (a, b) = match basis {
        Basis::Schur => return format!("s[{m}]"),
        Basis::PowerClass => ("+", "-"),
        Basis::PowerChar => ("tau", "eps"),
    };
    let mut f = fmt_factors(&m.plus, a);
    f.extend(fmt_factors(&m.minus, b));
    if f.is_empty() {
        "1".into()
    } else {
        f.join("*")
    }
}

impl fmt::Display for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return writeln!(f, "0");
        }
        for (m, c) in &self.coeffs {
            writeln!(f, "{} : {c}", monomial_name(self.basis, m))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `s_λ` as a Schur basis vector.
pub fn schur(lambda: &Bip) -> SymFun {
    SymFun::monomial(Basis::Schur, lambda.clone())
}

/// `h_n(γ) = s_{(n)}(γ)`.
pub fn h(n: usize, gamma: CharTag) -> SymFun {
    let row = if n == 0 { Partition::empty() } else { Partition::from_unsorted(vec![n]) };
    match gamma {
        CharTag::Tau => schur(&key(row, Partition::empty())),
        CharTag::Eps => schur(&key(Partition::empty(), row)),
    }
}

/// `ch(f) = Σ_ρ Z_ρ⁻¹ f(𝒞_ρ) p_{ρ^+}(+) p_{ρ^-}(−)`, in the class basis.
pub fn ch(f: &ClassFn) -> SymFun {
    let mut out = SymFun::zero(Basis::PowerClass);
    for (lambda, v) in &f.values {
        // Class labels carry negative cycles in `plus`.
        let (positive, negative) = (&lambda.minus, &lambda.plus);
        out.add_term(key(positive.clone(), negative.clone()), v / centralizer_order(positive, negative));
    }
    out
}

/// `ch⁻¹`, the algebra map sending `p_r(c)` to `2r` times the indicator of
/// an `r`-cycle with sign product `c`, applied to a homogeneous element.
pub fn ch_inverse(x: &SymFun) -> Result<ClassFn> {
    let x = x.to_basis(Basis::PowerClass);
    let n = x.coeffs.keys().map(|m| m.size()).max().unwrap_or(0);
    let mut out = ClassFn::zero(n);
    for (m, c) in &x.coeffs {
        check_size(m.size(), n)?;
        let mut acc = ClassFn::trivial(0);
        // p_r(±) ↦ 2r times the indicator of the single r-cycle class.
        for &r in m.plus.parts() {
            let cyc = ClassFn::indicator(&key(Partition::empty(), Partition::from_unsorted(vec![r])));
            acc = hopf::char_product(&acc, &cyc.scale(&rat(2 * r as i64)))?;
        }
        for &r in m.minus.parts() {
            let cyc = ClassFn::indicator(&key(Partition::from_unsorted(vec![r]), Partition::empty()));
            acc = hopf::char_product(&acc, &cyc.scale(&rat(2 * r as i64)))?;
        }
        out = out.add(&acc.scale(c))?;
    }
    Ok(out)
}

/// Semistandard tableaux of shape `mu` and weight `e`, built by adding one
/// horizontal strip per letter.
pub fn semistandard_tableaux(mu: &Partition, e: &[usize]) -> Vec<Tableau> {
    if mu.size() != e.iter().sum::<usize>() {
        return Vec::new();
    }
    let target = mu.parts().to_vec();
    let mut acc: Vec<Tableau> = vec![Vec::new()];
    for (letter, &count) in e.iter().enumerate() {
        let mut next = Vec::new();
        for t in acc {
            let before: Vec<usize> = t.iter().map(|r| r.len()).collect();
            add_strip(&t, &before, &target, letter + 1, count, 0, &mut next);
        }
        acc = next;
    }
    acc.retain(|t| t.iter().map(|r| r.len()).eq(target.iter().copied()));
    acc.sort();
    acc
}

/// Adds `count` copies of `letter` as a horizontal strip, choosing row by row from `row`.
fn add_strip(
    t: &Tableau,
    before: &[usize],
    target: &[usize],
    letter: usize,
    count: usize,
    row: usize,
    out: &mut Vec<Tableau>,
) {
    if count == 0 {
        out.push(t.clone());
        return;
    }
    if row >= target.len() {
        return;
    }
    let cur = t.get(row).map_or(0, |r| r.len());
    // Horizontal strip: the new boxes in this row must sit below filled boxes of the row above.
    let limit = if row == 0 { target[0] } else { before.get(row - 1).copied().unwrap_or(0).min(target[row]) };
    let room = limit.saturating_sub(cur);
    for k in (0..=room.min(count)).rev() {
        let mut u = t.clone();
        if k > 0 {
            if u.len() == row {
                u.push(Vec::new());
            }
            u[row].extend(std::iter::repeat_n(letter, k));
        }
        add_strip(&u, before, target, letter, count - k, row + 1, out);
    }
}

/// Semistandard tableaux by filtering all fillings of the diagram.
pub fn semistandard_tableaux_brute(mu: &Partition, e: &[usize]) -> Vec<Tableau> {
    use itertools::Itertools;
    let letters: Vec<usize> = e.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(i + 1, c)).collect();
    if letters.len() != mu.size() {
        return Vec::new();
    }
    let mut out: Vec<Tableau> = letters
        .iter()
        .copied()
        .permutations(letters.len())
        .unique()
        .map(|w| {
            let mut t = Vec::new();
            let mut it = w.into_iter();
            for &len in mu.parts() {
                t.push(it.by_ref().take(len).collect::<Vec<_>>());
            }
            t
        })
        .filter(|t: &Tableau| {
            t.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]))
                && t.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| a < b))
        })
        .collect();
    out.sort();
    out
}

/// `h_{e_1}(γ) h_{e_2}(γ) ⋯ = Σ_μ |Tab(μ, E)| s_μ(γ)`.
pub fn h_product_expansion(e: &[usize], gamma: CharTag) -> SymFun {
    let n: usize = e.iter().sum();
    let mut out = SymFun::zero(Basis::Schur);
    for mu in Partition::all(n) {
        let k = semistandard_tableaux(&mu, e).len() as i64;
        let lambda = match gamma {
            CharTag::Tau => key(mu, Partition::empty()),
            CharTag::Eps => key(Partition::empty(), mu),
        };
        out.add_term(lambda, rat(k));
    }
    out
}

/// `Comp(C)`: quasicompositions `D` with `d_i = 0` on positive parts and
/// `0 ≤ d_i ≤ −c_i` on negative parts.
pub fn comp_set(c: &SComp) -> Vec<Vec<usize>> {
    let mut acc = vec![Vec::new()];
    for &p in c.parts() {
        let max = if p < 0 { (-p) as usize } else { 0 };
        acc = acc
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                (0..=max).map(move |d| {
                    let mut u = v.clone();
                    u.push(d);
                    u
                })
            })
            .collect();
    }
    acc
}

/// The quasicompositions `T_{C,D}`, `E_{C,D}` and the signed composition `B_{C,D}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CdData {
    pub t: Vec<usize>,
    pub e: Vec<usize>,
    pub b: SComp,
}

pub fn cd_data(c: &SComp, d: &[usize]) -> Result<CdData> {
    if d.len() != c.len() {
        return Err(Error::Precondition(format!("D has {} terms, C has {}", d.len(), c.len())));
    }
    let mut t = Vec::new();
    let mut e = Vec::new();
    let mut b = Vec::new();
    for (&ci, &di) in c.parts().iter().zip(d) {
        let (ti, ei) = if ci > 0 {
            if di != 0 {
                return Err(Error::Precondition(format!("D ∉ Comp({c})")));
            }
            (ci as usize, 0)
        } else {
            let k = (-ci) as usize;
            if di > k {
                return Err(Error::Precondition(format!("D ∉ Comp({c})")));
            }
            (di, k - di)
        };
        t.push(ti);
        e.push(ei);
        if ei > 0 {
            b.push(-(ei as i32));
        }
        if ti > 0 {
            b.push(ti as i32);
        }
    }
    Ok(CdData { t, e, b: SComp::new(b)? })
}

/// `BiTab(λ, C) = {Q standard : sh Q = λ^*, C ← 𝐂(Q)}`.
pub fn bitab_set(lambda: &Bip, c: &SComp) -> Result<Vec<Bitab>> {
    check_size(lambda.size(), c.n())?;
    let target = lambda.star();
    let mut out = Vec::new();
    for q in rsk::sbt(c.n()) {
        if q.shape() == target && c.left_arrow(&rsk::tableau_composition(&q)?) {
            out.push(q);
        }
    }
    Ok(out)
}

/// An element `(D, R, S)` of `⊔_D Tab(λ^+, T_{C,D}) × Tab(λ^-, E_{C,D})`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TabPair {
    pub d: Vec<usize>,
    pub r: Tableau,
    pub s: Tableau,
}

/// All elements of the tableau side, for `|λ| = |C|`.
pub fn tab_pairs(lambda: &Bip, c: &SComp) -> Result<Vec<TabPair>> {
    check_size(lambda.size(), c.n())?;
    let mut out = Vec::new();
    for d in comp_set(c) {
        let cd = cd_data(c, &d)?;
        for r in semistandard_tableaux(&lambda.plus, &cd.t) {
            for s in semistandard_tableaux(&lambda.minus, &cd.e) {
                out.push(TabPair { d: d.clone(), r: r.clone(), s });
            }
        }
    }
    Ok(out)
}

/// Forward map: enumerate boxes by label, then `S` before `R`, then
/// south-west before north-east; fill by rank and transpose the negative part.
pub fn tab_pair_to_bitab(p: &TabPair) -> Result<Bitab> {
    let mut boxes: Vec<(usize, u8, usize, usize)> = Vec::new();
    for (which, t) in [(1u8, &p.r), (0u8, &p.s)] {
        for (i, row) in t.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                boxes.push((x, which, j, i));
            }
        }
    }
    boxes.sort();
    let mut plus: Tableau = p.r.iter().map(|r| vec![0; r.len()]).collect();
    let mut minus: Tableau = p.s.iter().map(|r| vec![0; r.len()]).collect();
    for (rank, &(_, which, j, i)) in boxes.iter().enumerate() {
        let t = if which == 1 { &mut plus } else { &mut minus };
        t[i][j] = rank + 1;
    }
    let minus = transpose(&minus);
    Bitab::new(plus, minus)
}

fn transpose(t: &Tableau) -> Tableau {
    let cols = t.first().map_or(0, |r| r.len());
    (0..cols).map(|j| t.iter().filter_map(|r| r.get(j).copied()).collect()).collect()
}

/// Backward map: find `D` with `C ←B B_{C,D} ←R 𝐂(Q)`, transpose `Q^-`, and
/// substitute the list `L = (1^{|c_1|}, 2^{|c_2|}, …)` for the entries.
pub fn bitab_to_tab_pair(q: &Bitab, c: &SComp) -> Result<TabPair> {
    let cq = rsk::tableau_composition(q)?;
    let b = c
        .refinement(&cq)?
        .ok_or_else(|| Error::Precondition(format!("({c}) ← ({cq}) fails")))?;
    let d = comp_set(c)
        .into_iter()
        .find(|d| cd_data(c, d).map(|x| x.b == b).unwrap_or(false))
        .ok_or_else(|| Error::Precondition(format!("no D with B = ({b})")))?;
    let list: Vec<usize> = c
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| std::iter::repeat_n(i + 1, p.unsigned_abs() as usize))
        .collect();
    let sub = |t: &Tableau| -> Tableau { t.iter().map(|r| r.iter().map(|&x| list[x - 1]).collect()).collect() };
    Ok(TabPair { d, r: sub(&q.plus), s: sub(&transpose(&q.minus)) })
}

/// The explicit bijection between `BiTab(λ, C)` and the tableau side.
#[derive(Clone, Debug, Serialize)]
pub struct Bijection {
    pub lambda: Bip,
    pub comp: SComp,
    pub pairs: Vec<(TabPair, Bitab)>,
}

pub fn bitab_bijection(lambda: &Bip, c: &SComp) -> Result<Bijection> {
    let pairs = tab_pairs(lambda, c)?
        .into_iter()
        .map(|p| {
            let q = tab_pair_to_bitab(&p)?;
            Ok((p, q))
        })
        .collect::<Result<_>>()?;
    Ok(Bijection { lambda: lambda.clone(), comp: c.clone(), pairs })
}

/// `f(z_Q) = s_{(sh Q)^*}`, extended linearly.
pub fn f_map(x: &CoplacticElem) -> SymFun {
    let mut out = SymFun::zero(Basis::Schur);
    for (q, c) in &x.q_coords {
        out.add_term(q.shape().star(), c.clone());
    }
    out
}

/// Character of `η_n(ρ)` on `V^{⊗n}`, `V` with `c_τ` trivial and `c_ε` sign
/// lines, by summing the diagonal of the action on the tensor basis.
pub fn eta_character(n: usize, c_tau: usize, c_eps: usize) -> Result<ClassFn> {
    let dim = c_tau + c_eps;
    let mut values = BTreeMap::new();
    for lambda in Bip::all(n) {
        let w = if n == 0 { crate::SignedPerm::empty() } else { characters::coxeter_element(&lambda) };
        let win = w.window();
        let mut trace = 0i64;
        let mut idx = vec![0usize; n];
        let total = dim.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            for slot in idx.iter_mut() {
                *slot = c % dim;
                c /= dim;
            }
            // w sends e_{i_k} in slot k to ±e_{i_k} in slot |w(k)|.
            let fixed = (0..n).all(|k| idx[win[k].unsigned_abs() as usize - 1] == idx[k]);
            if fixed {
                let sign: i64 = (0..n).map(|k| if win[k] < 0 && idx[k] >= c_tau { -1 } else { 1 }).product();
                trace += sign;
            }
        }
        if dim == 0 && n == 0 {
            trace = 1;
        }
        values.insert(lambda, rat(trace));
    }
    ClassFn::new(n, values)
}

/// Checks `Σ_n ch(η_n(ρ)) = Π_i (Σ_n h_n(γ_i))^{c_i}` degree by degree.
pub fn eta_character_check(c_tau: usize, c_eps: usize, max_n: usize) -> Result<Vec<(usize, bool)>> {
    check_envelope("eta_character_check", max_n, 4)?;
    // Truncated series Π (Σ h_n(γ))^{c}.
    let series = |gamma: CharTag| -> Vec<SymFun> { (0..=max_n).map(|k| h(k, gamma)).collect() };
    let mut prod: Vec<SymFun> = (0..=max_n).map(|k| if k == 0 { SymFun::one() } else { SymFun::zero(Basis::PowerClass) }).collect();
    let factors: Vec<CharTag> =
        std::iter::repeat_n(CharTag::Tau, c_tau).chain(std::iter::repeat_n(CharTag::Eps, c_eps)).collect();
    for g in factors {
        let s = series(g);
        let mut next: Vec<SymFun> = vec![SymFun::zero(Basis::PowerClass); max_n + 1];
        for (i, a) in prod.iter().enumerate() {
            for (j, b) in s.iter().enumerate() {
                if i + j <= max_n {
                    next[i + j] = next[i + j].add(&a.mul(b));
                }
            }
        }
        prod = next;
    }
    let mut out = Vec::new();
    for (n, rhs) in prod.iter().enumerate() {
        let lhs = ch(&eta_character(n, c_tau, c_eps)?);
        out.push((n, lhs.same_as(rhs)));
    }
    Ok(out)
}

/// `φ_{−n} = Σ_k h_k(τ) h_{n−k}(ε)`.
pub fn phi_negative(n: usize) -> SymFun {
    let mut out = SymFun::zero(Basis::Schur);
    for k in 0..=n {
        out = out.add(&h(k, CharTag::Tau).mul(&h(n - k, CharTag::Eps)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> Bip {
        s.parse().unwrap()
    }
    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }
    fn c(s: &str) -> SComp {
        s.parse().unwrap()
    }

    #[test]
    fn basis_changes_roundtrip() {
        let p1 = SymFun::monomial(Basis::PowerChar, b("1|"));
        assert_eq!(p1.to_basis(Basis::PowerClass).to_basis(Basis::PowerChar), p1);
        assert_eq!(schur(&b("1|")).to_basis(Basis::PowerChar), p1);
        let h2 = SymFun::monomial(Basis::PowerChar, b("1,1|"))
            .add(&SymFun::monomial(Basis::PowerChar, b("2|")))
            .scale(&frac(1, 2));
        assert_eq!(h2.to_basis(Basis::Schur), schur(&b("2|")));
        let s11 = schur(&b("1|1")).to_basis(Basis::PowerChar);
        assert_eq!(s11, SymFun::monomial(Basis::PowerChar, b("1|1")));
        assert_eq!(schur(&b("|")), SymFun::one().to_basis(Basis::Schur));
    }

    #[test]
    fn display_formats() {
        let x = SymFun::monomial(Basis::PowerClass, b("2|1"));
        assert_eq!(x.to_string(), "p2(+)*p1(-) : 1\n");
        assert_eq!(schur(&b("2,1|1")).to_string(), "s[2,1|1] : 1\n");
        assert_eq!(SymFun::monomial(Basis::PowerChar, b("2|1")).to_string(), "p2(tau)*p1(eps) : 1\n");
    }

    #[test]
    fn ch_of_trivial_and_sign_induced() {
        for n in 1..=4 {
            assert!(ch(&ClassFn::trivial(n)).same_as(&h(n, CharTag::Tau)));
            let ind = characters::induced_trivial(&SComp::new(vec![-(n as i32)]).unwrap()).unwrap();
            assert!(ch(&ind).same_as(&phi_negative(n)));
        }
    }

    #[test]
    fn ch_of_irreducibles() {
        for n in 1..=4 {
            for l in Bip::all(n) {
                let x = characters::irreducible(&l).unwrap();
                assert_eq!(ch(&x).to_basis(Basis::Schur), schur(&l.star()), "{l}");
            }
        }
    }

    #[test]
    fn ch_inverse_on_generators() {
        for n in 1..=4 {
            for m in Bip::all(n) {
                let x = SymFun::monomial(Basis::PowerClass, m.clone());
                assert_eq!(ch(&ch_inverse(&x).unwrap()), x, "{m}");
            }
        }
    }

    #[test]
    fn kostka_counts() {
        assert_eq!(semistandard_tableaux(&part("2"), &[1, 1]).len(), 1);
        assert_eq!(semistandard_tableaux(&part("1,1"), &[1, 1]).len(), 1);
        let e = h_product_expansion(&[3], CharTag::Tau);
        assert_eq!(e, schur(&b("3|")));
        let e = h_product_expansion(&[1, 1], CharTag::Eps);
        assert_eq!(e, schur(&b("|2")).add(&schur(&b("|1,1"))));
        for n in 0..=5 {
            for mu in Partition::all(n) {
                for e in [vec![n], vec![1; n], vec![0, n], vec![2, 0, n.saturating_sub(2)]] {
                    assert_eq!(semistandard_tableaux(&mu, &e), semistandard_tableaux_brute(&mu, &e));
                }
            }
        }
    }

    #[test]
    fn cd_example() {
        let cc = c("2,-2,-3,1,-1,2,2,-2");
        let x = cd_data(&cc, &[0, 0, 2, 0, 1, 0, 0, 0]).unwrap();
        assert_eq!(x.t, vec![2, 0, 2, 1, 1, 2, 2, 0]);
        assert_eq!(x.e, vec![0, 2, 1, 0, 0, 0, 0, 2]);
        assert_eq!(x.b, c("2,-2,-1,2,1,1,2,2,-2"));
        assert!(cd_data(&cc, &[1, 0, 0, 0, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn bijection_example() {
        let cc = c("2,-2,-3,1,-1,2,2,-2");
        let p = TabPair {
            d: vec![0, 0, 2, 0, 1, 0, 0, 0],
            r: vec![vec![1, 1, 3, 3, 4, 7], vec![5, 6, 7], vec![6]],
            s: vec![vec![2, 2, 3, 8], vec![8]],
        };
        let q: Bitab = "1 2 6 7 8 13, 9 11 12, 10 ; 3 14, 4, 5, 15".parse().unwrap();
        assert_eq!(tab_pair_to_bitab(&p).unwrap(), q);
        assert_eq!(bitab_to_tab_pair(&q, &cc).unwrap(), p);
    }

    #[test]
    fn eta_generating_series() {
        for (a, e) in [(1, 0), (1, 1), (0, 1), (2, 1)] {
            for (n, ok) in eta_character_check(a, e, 4).unwrap() {
                assert!(ok, "({a},{e}) at {n}");
            }
        }
        for n in 0..=4 {
            assert_eq!(eta_character(n, 1, 0).unwrap(), ClassFn::trivial(n));
        }
    }
}
