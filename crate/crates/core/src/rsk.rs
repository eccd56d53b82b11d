//! The signed Robinson–Schensted correspondence, standard bitableaux,
//! coplactic classes `Z_Q` and the extension `θ̃` of `θ` to the coplactic
//! space.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{self, AlgElem};
use crate::characters::{self, ClassFn};
use crate::comp::{Bip, Partition, SComp};
use crate::error::{check_envelope, Error, Result};
use crate::group;
use crate::linalg::{self, Matrix};
use crate::perm::{GenElem, SignedPerm};
use crate::Rat;

/// Rows of a Young tableau, top row first.
pub type Tableau = Vec<Vec<usize>>;

/// A pair of tableaux `T = (T^+, T^-)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bitab {
    pub plus: Tableau,
    pub minus: Tableau,
}

fn shape_of(t: &Tableau) -> Partition {
    Partition::from_unsorted(t.iter().map(|r| r.len()).collect())
}

fn transpose_tableau(t: &Tableau) -> Tableau {
    let cols = t.first().map_or(0, |r| r.len());
    (0..cols).map(|j| t.iter().filter_map(|r| r.get(j).copied()).collect()).collect()
}

fn find(t: &Tableau, x: usize) -> Option<(usize, usize)> {
    t.iter().enumerate().find_map(|(i, r)| r.iter().position(|&y| y == x).map(|j| (i, j)))
}

fn is_standard_shape(t: &Tableau) -> bool {
    t.iter().all(|r| !r.is_empty())
        && t.windows(2).all(|w| w[0].len() >= w[1].len())
        && t.iter().all(|r| r.windows(2).all(|p| p[0] < p[1]))
        && t.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| a < b))
}

impl Bitab {
    /// Validates that both tableaux are standard and jointly filled by `1..=n`.
    pub fn new(plus: Tableau, minus: Tableau) -> Result<Self> {
        let t = Bitab { plus, minus };
        if !is_standard_shape(&t.plus) || !is_standard_shape(&t.minus) {
            return Err(Error::InvalidTableau(format!("{t} is not standard")));
        }
        let mut all: Vec<usize> = t.entries().collect();
        all.sort_unstable();
        if all != (1..=all.len()).collect::<Vec<_>>() {
            return Err(Error::InvalidTableau(format!("{t} is not filled by 1..n")));
        }
        Ok(t)
    }

    fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.plus.iter().chain(&self.minus).flatten().copied()
    }

    pub fn n(&self) -> usize {
        self.entries().count()
    }

    /// `sh T = (sh T^+, sh T^-)`.
    pub fn shape(&self) -> Bip {
        Bip::new(shape_of(&self.plus), shape_of(&self.minus))
    }

    /// `T^∨ = (T^-, T^+)`.
    pub fn dual(&self) -> Bitab {
        Bitab { plus: self.minus.clone(), minus: self.plus.clone() }
    }
}

fn fmt_tableau(t: &Tableau) -> String {
    t.iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(", ")
}

impl fmt::Display for Bitab {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format!("{} ; {}", fmt_tableau(&self.plus), fmt_tableau(&self.minus));
        write!(f, "{}", s.trim())
    }
}

impl fmt::Debug for Bitab {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

fn parse_tableau(s: &str) -> Result<Tableau> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|row| {
            row.split_whitespace()
                .map(|x| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad tableau entry `{x}`"))))
                .collect()
        })
        .collect()
}

impl FromStr for Bitab {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s.split_once(';').ok_or_else(|| Error::Parse(format!("bitableau `{s}` lacks `;`")))?;
        Bitab::new(parse_tableau(a)?, parse_tableau(b)?)
    }
}

/// Row-inserts `x`; returns the row that received a new box.
fn row_insert(t: &mut Tableau, mut x: usize) -> usize {
    for (i, row) in t.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(j) => x = std::mem::replace(&mut row[j], x),
            None => {
                row.push(x);
                return i;
            }
        }
    }
    t.push(vec![x]);
    t.len() - 1
}

/// Removes the last box of `row` and bumps it back up; returns the ejected value.
fn reverse_bump(t: &mut Tableau, row: usize) -> usize {
    let mut x = t[row].pop().expect("nonempty row");
    if t[row].is_empty() {
        t.pop();
    }
    for r in (0..row).rev() {
        let j = t[r].iter().rposition(|&y| y < x).expect("standard tableau");
        x = std::mem::replace(&mut t[r][j], x);
    }
    x
}

/// `(P(w), Q(w))`: positive letters are row-inserted into `P^+`, absolute
/// values of negative letters into `P^-`; `Q` records positions.
pub fn rsk(w: &SignedPerm) -> (Bitab, Bitab) {
    let mut p = Bitab { plus: Vec::new(), minus: Vec::new() };
    let mut q = p.clone();
    for (i, &v) in w.window().iter().enumerate() {
        if v > 0 {
            let r = row_insert(&mut p.plus, v as usize);
            push_at(&mut q.plus, r, i + 1);
        } else {
            let r = row_insert(&mut p.minus, v.unsigned_abs() as usize);
            push_at(&mut q.minus, r, i + 1);
        }
    }
    (p, q)
}

fn push_at(t: &mut Tableau, r: usize, x: usize) {
    if r == t.len() {
        t.push(Vec::new());
    }
    t[r].push(x);
}

/// `Q(w)`.
pub fn recording(w: &SignedPerm) -> Bitab {
    rsk(w).1
}

/// Inverse of [`rsk`].
pub fn rsk_inverse(p: &Bitab, q: &Bitab) -> Result<SignedPerm> {
    if p.shape() != q.shape() {
        return Err(Error::InvalidTableau(format!("shapes of {p} and {q} differ")));
    }
    let n = q.n();
    let (mut p, mut q) = (p.clone(), q.clone());
    let mut window = vec![0i32; n];
    for i in (1..=n).rev() {
        let positive = find(&q.plus, i).is_some();
        let (pt, qt) = if positive { (&mut p.plus, &mut q.plus) } else { (&mut p.minus, &mut q.minus) };
        let (r, c) = find(qt, i).ok_or_else(|| Error::InvalidTableau(format!("{i} missing")))?;
        if c + 1 != qt[r].len() || qt.get(r + 1).is_some_and(|next| next.len() > c) {
            return Err(Error::InvalidTableau(format!("{i} is not a corner")));
        }
        qt[r].pop();
        if qt[r].is_empty() {
            qt.pop();
        }
        let x = reverse_bump(pt, r) as i32;
        window[i - 1] = if positive { x } else { -x };
    }
    SignedPerm::new(window)
}

/// Orientation used to read "lies in a row above".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Row 1 is drawn on top.
    English,
    /// Row 1 is drawn at the bottom.
    French,
}

fn row_descents(t: &Tableau, o: Orientation) -> Vec<usize> {
    let mut out = Vec::new();
    for row in t {
        for &p in row {
            if let (Some((rp, _)), Some((rq, _))) = (find(t, p), find(t, p + 1)) {
                let above = match o {
                    Orientation::English => rq < rp,
                    Orientation::French => rq > rp,
                };
                if above {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// `𝒟'(T)`, reading "above" in English orientation.
pub fn tableau_descents(t: &Bitab) -> BTreeSet<GenElem> {
    tableau_descents_oriented(t, Orientation::English)
}

/// `𝒟'(T) = {t_p : p ∈ T^-} ⊔ {s_p : p ∈ T^+, p+1 ∈ T^-} ⊔ 𝒟(T^+) ⊔ 𝒟(ᵗT^-)`.
pub fn tableau_descents_oriented(t: &Bitab, o: Orientation) -> BTreeSet<GenElem> {
    let in_minus = |p: usize| find(&t.minus, p).is_some();
    let in_plus = |p: usize| find(&t.plus, p).is_some();
    let mut out: BTreeSet<GenElem> = t.minus.iter().flatten().map(|&p| GenElem::T(p)).collect();
    out.extend(t.plus.iter().flatten().filter(|&&p| in_minus(p + 1)).map(|&p| GenElem::S(p)));
    out.extend(row_descents(&t.plus, o).into_iter().filter(|&p| in_plus(p + 1)).map(GenElem::S));
    out.extend(row_descents(&transpose_tableau(&t.minus), o).into_iter().map(GenElem::S));
    out
}

/// `𝐂(Q)`: `j, j+1` stay in one run when both lie in `Q^+` with `j+1` in a
/// later column, or both lie in `Q^-` with `j+1` in a later row.
pub fn tableau_composition(q: &Bitab) -> Result<SComp> {
    let n = q.n();
    let locate = |j: usize| -> (bool, (usize, usize)) {
        match find(&q.plus, j) {
            Some(rc) => (true, rc),
            None => (false, find(&q.minus, j).expect("filled by 1..n")),
        }
    };
    let mut parts = Vec::new();
    let mut start = 1;
    for j in 1..=n {
        let (pos, (r, c)) = locate(j);
        let continues = j < n && {
            let (pos2, (r2, c2)) = locate(j + 1);
            pos == pos2 && if pos { c2 > c } else { r2 > r }
        };
        if !continues {
            let len = (j + 1 - start) as i32;
            parts.push(if pos { len } else { -len });
            start = j + 1;
        }
    }
    SComp::new(parts)
}

/// Standard Young tableaux of shape `shape` filled by `entries` (sorted).
pub fn standard_tableaux(shape: &Partition, entries: &[usize]) -> Vec<Tableau> {
    if entries.is_empty() {
        return vec![Vec::new()];
    }
    let (&last, rest) = entries.split_last().unwrap();
    let parts = shape.parts();
    let mut out = Vec::new();
    for i in 0..parts.len() {
        if parts.get(i + 1).copied().unwrap_or(0) < parts[i] {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            for mut t in standard_tableaux(&Partition::from_unsorted(smaller), rest) {
                push_at(&mut t, i, last);
                out.push(t);
            }
        }
    }
    out.sort();
    out
}

/// `SBT(n)`, grouped by shape in Bip order.
pub fn sbt(n: usize) -> Vec<Bitab> {
    use itertools::Itertools;
    let mut out = Vec::new();
    for lambda in Bip::all(n) {
        let k = lambda.plus.size();
        for plus_set in (1..=n).combinations(k) {
            let minus_set: Vec<usize> = (1..=n).filter(|x| !plus_set.contains(x)).collect();
            for tp in standard_tableaux(&lambda.plus, &plus_set) {
                for tm in standard_tableaux(&lambda.minus, &minus_set) {
                    out.push(Bitab { plus: tp.clone(), minus: tm });
                }
            }
        }
    }
    out
}

/// Whether `w ⌣ s_i w`: the descent sets of `w⁻¹` and `(s_i w)⁻¹` are incomparable.
pub fn coplactic_edge(w: &SignedPerm, i: usize) -> bool {
    let n = w.n();
    let si = GenElem::S(i).to_perm(n).expect("i < n");
    let a = w.inverse().descent_set();
    let b = si.compose_unchecked(w).inverse().descent_set();
    !a.is_subset(&b) && !b.is_subset(&a)
}

/// The combinatorial form of [`coplactic_edge`]: letters `±i`, `±(i+1)` of
/// different signs, or a classical dual-Knuth move inside the subword of
/// their common sign.
pub fn coplactic_edge_combinatorial(w: &SignedPerm, i: usize) -> bool {
    let win = w.window();
    let pos = |a: usize| win.iter().position(|&x| x.unsigned_abs() as usize == a).unwrap();
    let (p, q) = (pos(i), pos(i + 1));
    let sign = win[p] > 0;
    if sign != (win[q] > 0) {
        return true;
    }
    let same: Vec<usize> =
        win.iter().filter(|&&x| (x > 0) == sign).map(|&x| x.unsigned_abs() as usize).collect();
    let below = same.iter().copied().filter(|&a| a < i).max();
    let above = same.iter().copied().filter(|&a| a > i + 1).min();
    let (lo, hi) = (p.min(q), p.max(q));
    [below, above].into_iter().flatten().any(|a| {
        let r = pos(a);
        lo < r && r < hi
    })
}

/// Largest n for which coplactic data is cached.
pub const MAX_COPLACTIC_N: usize = 5;
/// Largest n for which `θ̃` is computed.
pub const MAX_THETA_TILDE_N: usize = 4;

/// The classes `Z_Q` of W_n.
pub struct CoplacticData {
    pub n: usize,
    pub tabs: Vec<Bitab>,
    pub index: HashMap<Bitab, usize>,
    /// Class of each group element (by group index).
    pub class_of: Vec<usize>,
    pub members: Vec<Vec<SignedPerm>>,
    theta: OnceLock<Vec<ClassFn>>,
}

static COPLACTIC: [OnceLock<CoplacticData>; MAX_COPLACTIC_N + 1] =
    [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];

pub fn coplactic_data(n: usize) -> Result<&'static CoplacticData> {
    check_envelope("coplactic data", n, MAX_COPLACTIC_N)?;
    Ok(COPLACTIC[n].get_or_init(|| {
        let g = group::table(n).expect("envelope checked");
        let tabs = sbt(n);
        let index: HashMap<Bitab, usize> = tabs.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        let class_of: Vec<usize> = g.elems.iter().map(|w| index[&recording(w)]).collect();
        let mut members = vec![Vec::new(); tabs.len()];
        for (w, &c) in g.elems.iter().zip(&class_of) {
            members[c].push(w.clone());
        }
        CoplacticData { n, tabs, index, class_of, members, theta: OnceLock::new() }
    }))
}

/// Classes of the closure of `⌣` computed by graph search over left
/// multiplication by `s_i`, with `edge` deciding each step.
pub fn coplactic_closure(n: usize, edge: impl Fn(&SignedPerm, usize) -> bool) -> Result<Vec<Vec<SignedPerm>>> {
    check_envelope("coplactic_closure", n, MAX_COPLACTIC_N)?;
    let g = group::table(n)?;
    let gens: Vec<usize> =
        (1..n).map(|i| g.index_of(&GenElem::S(i).to_perm(n).unwrap())).collect();
    let mut seen = vec![false; g.size()];
    let mut out = Vec::new();
    for start in 0..g.size() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut class = Vec::new();
        let mut queue = VecDeque::from([start]);
        while let Some(a) = queue.pop_front() {
            class.push(g.elems[a].clone());
            for (k, &s) in gens.iter().enumerate() {
                let b = g.mul(s, a);
                if !seen[b] && edge(&g.elems[a], k + 1) {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        class.sort();
        out.push(class);
    }
    out.sort();
    Ok(out)
}

/// The coplactic classes of W_n, each labelled by its recording bitableau.
pub fn coplactic_classes(n: usize) -> Result<Vec<(Bitab, Vec<SignedPerm>)>> {
    let cd = coplactic_data(n)?;
    Ok(cd.tabs.iter().cloned().zip(cd.members.iter().cloned()).collect())
}

/// An element `Σ c_Q z_Q` of the coplactic space `Q_n`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct CoplacticElem {
    pub n: usize,
    pub q_coords: BTreeMap<Bitab, Rat>,
}

impl CoplacticElem {
    pub fn zero(n: usize) -> Self {
        CoplacticElem { n, q_coords: BTreeMap::new() }
    }

    /// `z_Q`.
    pub fn z(q: &Bitab) -> Self {
        let mut e = Self::zero(q.n());
        e.q_coords.insert(q.clone(), Rat::one());
        e
    }

    pub fn add_term(&mut self, q: Bitab, c: Rat) {
        let v = self.q_coords.entry(q).or_insert_with(Rat::zero);
        *v += c;
        if v.is_zero() {
            self.q_coords.retain(|_, v| !v.is_zero());
        }
    }

    /// `Σ c_Q z_Q` in ℚW_n.
    pub fn to_alg(&self) -> Result<AlgElem> {
        let cd = coplactic_data(self.n)?;
        let mut a = AlgElem::zero(self.n);
        for (q, c) in &self.q_coords {
            for w in &cd.members[cd.index[q]] {
                a.add_term(w.clone(), c.clone());
            }
        }
        Ok(a)
    }

    /// Coordinates of `a ∈ Q_n`, or `None` if `a ∉ Q_n`.
    pub fn from_alg(a: &AlgElem) -> Result<Option<Self>> {
        let cd = coplactic_data(a.n())?;
        let mut out = Self::zero(a.n());
        for (q, members) in cd.tabs.iter().zip(&cd.members) {
            let c = a.coeff(&members[0]);
            if members.iter().any(|w| a.coeff(w) != c) {
                return Ok(None);
            }
            out.add_term(q.clone(), c);
        }
        Ok(Some(out))
    }

    pub fn to_vec(&self) -> Result<Vec<Rat>> {
        let cd = coplactic_data(self.n)?;
        Ok(cd.tabs.iter().map(|q| self.q_coords.get(q).cloned().unwrap_or_else(Rat::zero)).collect())
    }
}

impl fmt::Display for CoplacticElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (q, c) in &self.q_coords {
            writeln!(f, "z[{q}] : {c}")?;
        }
        Ok(())
    }
}

/// `x_C` in the `z`-basis: `Σ_{C ← 𝐂(Q)} z_Q`.
pub fn x_in_z_basis(c: &SComp) -> Result<CoplacticElem> {
    let cd = coplactic_data(c.n())?;
    let mut out = CoplacticElem::zero(c.n());
    for q in &cd.tabs {
        if c.left_arrow(&tableau_composition(q)?) {
            out.add_term(q.clone(), Rat::one());
        }
    }
    Ok(out)
}

/// Spanning set `{z_Q - z_{Q_λ}}` of `Q_n^⊥`, with `Q_λ` the first bitableau of each shape.
pub fn perp_spanning_set(n: usize) -> Result<Vec<CoplacticElem>> {
    let cd = coplactic_data(n)?;
    let mut first: HashMap<Bip, &Bitab> = HashMap::new();
    let mut out = Vec::new();
    for q in &cd.tabs {
        match first.get(&q.shape()) {
            None => {
                first.insert(q.shape(), q);
            }
            Some(q0) => {
                let mut e = CoplacticElem::z(q);
                e.add_term((*q0).clone(), -Rat::one());
                out.push(e);
            }
        }
    }
    Ok(out)
}

fn theta_tilde_basis(n: usize) -> Result<&'static Vec<ClassFn>> {
    check_envelope("theta_tilde", n, MAX_THETA_TILDE_N)?;
    let cd = coplactic_data(n)?;
    if let Some(v) = cd.theta.get() {
        return Ok(v);
    }
    let comps = SComp::all(n);
    let mut columns: Vec<Vec<Rat>> = Vec::new();
    for c in &comps {
        columns.push(x_in_z_basis(c)?.to_vec()?);
    }
    for d in perp_spanning_set(n)? {
        columns.push(d.to_vec()?);
    }
    let m: Matrix = linalg::transpose(&columns);
    let thetas: Vec<ClassFn> = comps.iter().map(characters::induced_trivial).collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(cd.tabs.len());
    for i in 0..cd.tabs.len() {
        let mut e = vec![Rat::zero(); cd.tabs.len()];
        e[i] = Rat::one();
        let u = linalg::solve(&m, &e)
            .ok_or_else(|| Error::Precondition("Q_n is not spanned by Σ' and Q_n^⊥".into()))?;
        let mut f = ClassFn::zero(n);
        for (coef, th) in u.iter().zip(&thetas) {
            if !coef.is_zero() {
                f = f.add(&th.scale(coef))?;
            }
        }
        out.push(f);
    }
    Ok(cd.theta.get_or_init(|| out))
}

/// `θ̃(x) = θ(a)` where `x = a + b`, `a ∈ Σ'(W_n)`, `b ∈ Q_n^⊥`.
pub fn theta_tilde(x: &CoplacticElem) -> Result<ClassFn> {
    let basis = theta_tilde_basis(x.n)?;
    let cd = coplactic_data(x.n)?;
    let mut f = ClassFn::zero(x.n);
    for (q, c) in &x.q_coords {
        f = f.add(&basis[cd.index[q]].scale(c))?;
    }
    Ok(f)
}

/// `θ̃` of a group-algebra element lying in `Q_n`.
pub fn theta_tilde_alg(a: &AlgElem) -> Result<ClassFn> {
    let x = CoplacticElem::from_alg(a)?.ok_or_else(|| Error::Precondition("element is not in Q_n".into()))?;
    theta_tilde(&x)
}

/// Gram matrix `τ(z_Q z_{Q'})` over `SBT(n)`.
pub fn coplactic_gram(n: usize) -> Result<Matrix> {
    let cd = coplactic_data(n)?;
    let zs: Vec<AlgElem> =
        cd.tabs.iter().map(|q| CoplacticElem::z(q).to_alg()).collect::<Result<_>>()?;
    zs.iter().map(|a| zs.iter().map(|b| algebra::tau(a, b)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }
    fn t(s: &str) -> Bitab {
        s.parse().unwrap()
    }

    #[test]
    fn text_format_roundtrip() {
        let b = t("1 2, 3 ; 4, 5");
        assert_eq!(b.to_string(), "1 2, 3 ; 4, 5");
        assert_eq!(t("1 2 ;").to_string(), "1 2 ;");
        assert_eq!(t("; 1").to_string(), "; 1");
        assert!("1 3 ; 2 4".parse::<Bitab>().is_ok());
        assert!("2 1 ;".parse::<Bitab>().is_err());
        assert!("1 3 ;".parse::<Bitab>().is_err());
    }

    #[test]
    fn identity_and_inverse() {
        let (pp, q) = rsk(&SignedPerm::identity(3));
        assert_eq!(pp, t("1 2 3 ;"));
        assert_eq!(q, pp);
        for w in SignedPerm::all(4) {
            let (a, b) = rsk(&w);
            assert_eq!(rsk_inverse(&a, &b).unwrap(), w);
            assert_eq!(rsk(&w.inverse()), (b, a));
        }
    }

    #[test]
    fn descent_example() {
        let got = tableau_descents(&t("1 7, 6 9, 8 ; 2 3 5, 4"));
        let want: BTreeSet<GenElem> =
            ["s1", "s3", "s6", "s8", "t2", "t3", "t4", "t5"].iter().map(|s| s.parse().unwrap()).collect();
        assert_eq!(got, want);
        assert!(tableau_descents(&t("1 2 3 ;")).is_empty());
    }

    #[test]
    fn composition_example() {
        let q = t("1 2 6 7 8 13, 9 11 12, 10 ; 3 14, 4, 5, 15");
        assert_eq!(tableau_composition(&q).unwrap().to_string(), "2,-3,3,1,4,-2");
        for w in SignedPerm::all(4) {
            assert_eq!(tableau_composition(&recording(&w)).unwrap(), w.descent_composition());
        }
    }

    #[test]
    fn sbt_counts_match_classes() {
        for n in 1..=4 {
            let cd = coplactic_data(n).unwrap();
            assert_eq!(cd.tabs.len(), cd.members.iter().filter(|m| !m.is_empty()).count());
            let squares: usize = cd.members.iter().map(|m| m.len()).sum();
            assert_eq!(squares, group::order(n));
        }
        assert_eq!(sbt(2).len(), 6);
    }

    #[test]
    fn both_edge_rules_give_q_fibers() {
        for n in 1..=4 {
            let mut fibers: Vec<Vec<SignedPerm>> = coplactic_data(n).unwrap().members.clone();
            fibers.sort();
            assert_eq!(coplactic_closure(n, coplactic_edge).unwrap(), fibers);
            assert_eq!(coplactic_closure(n, coplactic_edge_combinatorial).unwrap(), fibers);
        }
    }

    #[test]
    fn theta_tilde_gives_irreducibles() {
        for n in 1..=3 {
            let cd = coplactic_data(n).unwrap();
            for q in &cd.tabs {
                let f = theta_tilde(&CoplacticElem::z(q)).unwrap();
                assert_eq!(f, characters::irreducible(&q.shape()).unwrap(), "{q}");
            }
        }
    }

    #[test]
    fn descent_orientation() {
        for n in 1..=4 {
            for w in SignedPerm::all(n) {
                let q = recording(&w);
                assert_eq!(tableau_descents_oriented(&q, Orientation::French), w.descent_set(), "{w}");
            }
        }
        let s = p("2 1");
        assert_ne!(tableau_descents(&recording(&s)), s.descent_set());
    }

    #[test]
    fn longest_element_dualizes_classes() {
        for n in 1..=4 {
            let cd = coplactic_data(n).unwrap();
            let w0 = SignedPerm::longest(n);
            for (q, members) in cd.tabs.iter().zip(&cd.members) {
                for w in members {
                    assert_eq!(recording(&w0.compose(w).unwrap()), q.dual());
                }
            }
        }
    }

    #[test]
    fn eta_recording_shape() {
        for n in 1..=4 {
            for l in Bip::all(n) {
                let q = recording(&crate::cosets::eta(&l.hat()));
                assert_eq!(q.shape(), l.star(), "{l}");
            }
        }
    }
}
