//! The group algebra ℚW_n, the elements `x_C`, `y_C` and the subalgebra
//! `Σ'(W_n)` they span.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::comp::{Bip, SComp};
use crate::cosets;
use crate::error::{check_envelope, check_size, Error, Result};
use crate::group::{self, GroupTable};
use crate::linalg::{self, Matrix, Span};
use crate::perm::SignedPerm;
use crate::Rat;

/// A finitely supported `ℚ`-combination of elements of W_n.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgElem {
    n: usize,
    coeffs: BTreeMap<SignedPerm, Rat>,
}

impl AlgElem {
    pub fn zero(n: usize) -> Self {
        AlgElem { n, coeffs: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::from_perm(&SignedPerm::identity(n))
    }

    pub fn from_perm(w: &SignedPerm) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(w.clone(), Rat::one());
        AlgElem { n: w.n(), coeffs }
    }

    /// Sum of the given elements with coefficient 1 each.
    pub fn indicator<'a>(n: usize, ws: impl IntoIterator<Item = &'a SignedPerm>) -> Result<Self> {
        Self::from_terms(n, ws.into_iter().map(|w| (w.clone(), Rat::one())))
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (SignedPerm, Rat)>) -> Result<Self> {
        let mut a = AlgElem::zero(n);
        for (w, c) in terms {
            check_size(n, w.n())?;
            a.add_term(w, c);
        }
        Ok(a)
    }

    pub fn add_term(&mut self, w: SignedPerm, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(w);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, w: &SignedPerm) -> Rat {
        self.coeffs.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SignedPerm, &Rat)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &AlgElem) -> Result<AlgElem> {
        check_size(self.n, other.n)?;
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AlgElem) -> Result<AlgElem> {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, k: &Rat) -> AlgElem {
        if k.is_zero() {
            return AlgElem::zero(self.n);
        }
        AlgElem { n: self.n, coeffs: self.coeffs.iter().map(|(w, c)| (w.clone(), c * k)).collect() }
    }

    /// Sum of coefficients.
    pub fn augmentation(&self) -> Rat {
        self.coeffs.values().sum()
    }

    /// The coefficient of the identity.
    pub fn trace(&self) -> Rat {
        self.coeff(&SignedPerm::identity(self.n))
    }

    /// Product in ℚW_n.
    pub fn multiply(&self, other: &AlgElem) -> Result<AlgElem> {
        check_size(self.n, other.n)?;
        let g = group::table(self.n)?;
        Ok(multiply_in(g, self, other))
    }

    /// Dense coefficient vector indexed by the group table.
    pub fn to_dense(&self) -> Result<Vec<Rat>> {
        let g = group::table(self.n)?;
        let mut v = vec![Rat::zero(); g.size()];
        for (w, c) in &self.coeffs {
            v[g.index_of(w)] = c.clone();
        }
        Ok(v)
    }

    pub fn from_dense(n: usize, v: &[Rat]) -> Result<AlgElem> {
        let g = group::table(n)?;
        AlgElem::from_terms(n, v.iter().enumerate().map(|(i, c)| (g.elems[i].clone(), c.clone())))
    }
}

/// Splits rational coefficients into integer numerators over a common denominator.
fn integerize(a: &AlgElem) -> Option<(BigInt, Vec<(usize, i128)>, &'static GroupTable)> {
    let g = group::table(a.n).ok()?;
    let lcm = a.coeffs.values().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let terms = a
        .coeffs
        .iter()
        .map(|(w, c)| {
            let num = c.numer() * (&lcm / c.denom());
            num.to_i128().filter(|x| x.abs() < 1 << 40).map(|x| (g.index_of(w), x))
        })
        .collect::<Option<Vec<_>>>()?;
    Some((lcm, terms, g))
}

fn multiply_in(g: &GroupTable, a: &AlgElem, b: &AlgElem) -> AlgElem {
    if let (Some((la, ta, _)), Some((lb, tb, _))) = (integerize(a), integerize(b)) {
        if ta.len().saturating_mul(tb.len()) < 1 << 22 || ta.len() < 1 << 12 {
            let mut acc = vec![0i128; g.size()];
            for &(i, x) in &ta {
                for &(j, y) in &tb {
                    acc[g.mul(i, j)] += x * y;
                }
            }
            let den = la * lb;
            let coeffs = acc
                .into_iter()
                .enumerate()
                .filter(|(_, v)| *v != 0)
                .map(|(k, v)| (g.elems[k].clone(), Rat::new(BigInt::from(v), den.clone())))
                .collect();
            return AlgElem { n: a.n, coeffs };
        }
    }
    let mut acc: HashMap<usize, Rat> = HashMap::new();
    for (u, x) in &a.coeffs {
        let i = g.index_of(u);
        for (v, y) in &b.coeffs {
            *acc.entry(g.mul(i, g.index_of(v))).or_insert_with(Rat::zero) += x * y;
        }
    }
    let coeffs = acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (g.elems[k].clone(), c)).collect();
    AlgElem { n: a.n, coeffs }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return writeln!(f, "0");
        }
        for (w, c) in &self.coeffs {
            writeln!(f, "{w} : {c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coeffs.iter().map(|(w, c)| format!("{c}·[{w}]")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// `τ(ab)`: the coefficient of the identity in `ab`.
pub fn tau(a: &AlgElem, b: &AlgElem) -> Result<Rat> {
    check_size(a.n(), b.n())?;
    Ok(a.terms().map(|(w, c)| c * b.coeff(&w.inverse())).sum())
}

/// `x_C = Σ_{w ∈ X_C} w`.
pub fn x_element(c: &SComp) -> Result<AlgElem> {
    AlgElem::indicator(c.n(), &cosets::x_set(c)?)
}

/// `y_C = Σ_{w ∈ Y_C} w`.
pub fn y_element(c: &SComp) -> Result<AlgElem> {
    AlgElem::indicator(c.n(), &cosets::descent_fiber(c)?)
}

/// `x_C^D = Σ_{w ∈ X_C^D} w`, for `C ⊂ D`.
pub fn x_element_in(c: &SComp, d: &SComp) -> Result<AlgElem> {
    AlgElem::indicator(c.n(), &cosets::min_coset_reps(c, d)?.reps)
}

/// An element of `Σ'(W_n)` written in the basis `(x_C)`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct SigmaExpr {
    pub n: usize,
    pub x_coords: BTreeMap<SComp, Rat>,
}

impl SigmaExpr {
    pub fn zero(n: usize) -> Self {
        SigmaExpr { n, x_coords: BTreeMap::new() }
    }

    pub fn basis(c: &SComp) -> Self {
        let mut s = Self::zero(c.n());
        s.x_coords.insert(c.clone(), Rat::one());
        s
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (SComp, Rat)>) -> Result<Self> {
        let mut s = Self::zero(n);
        for (c, k) in terms {
            check_size(n, c.n())?;
            s.add_term(c, k);
        }
        Ok(s)
    }

    pub fn add_term(&mut self, c: SComp, k: Rat) {
        let v = self.x_coords.entry(c.clone()).or_insert_with(Rat::zero);
        *v += k;
        if v.is_zero() {
            self.x_coords.remove(&c);
        }
    }

    pub fn coord(&self, c: &SComp) -> Rat {
        self.x_coords.get(c).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.x_coords.is_empty()
    }

    pub fn add(&self, other: &SigmaExpr) -> Result<SigmaExpr> {
        check_size(self.n, other.n)?;
        let mut out = self.clone();
        for (c, k) in &other.x_coords {
            out.add_term(c.clone(), k.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rat) -> SigmaExpr {
        let mut out = Self::zero(self.n);
        for (c, v) in &self.x_coords {
            out.add_term(c.clone(), v * k);
        }
        out
    }

    pub fn sub(&self, other: &SigmaExpr) -> Result<SigmaExpr> {
        self.add(&other.scale(&-Rat::one()))
    }

    /// Coordinates as a dense vector over `Comp(n)` in enumeration order.
    pub fn to_vec(&self) -> Vec<Rat> {
        SComp::all(self.n).iter().map(|c| self.coord(c)).collect()
    }

    pub fn from_vec(n: usize, v: &[Rat]) -> SigmaExpr {
        let mut s = Self::zero(n);
        for (c, k) in SComp::all(n).into_iter().zip(v) {
            s.add_term(c, k.clone());
        }
        s
    }

    /// The group-algebra element `Σ a_C x_C`.
    pub fn to_alg(&self) -> Result<AlgElem> {
        let sb = sigma_basis(self.n)?;
        let mut dense = vec![Rat::zero(); group::table(self.n)?.size()];
        for (c, k) in &self.x_coords {
            for &i in &sb.x_support[sb.index[c]] {
                dense[i] += k;
            }
        }
        AlgElem::from_dense(self.n, &dense)
    }
}

impl fmt::Display for SigmaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.x_coords.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.x_coords.iter().map(|(c, k)| format!("{k}*x[{c}]")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for SigmaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cached data for converting between ℚW_n and the `x`/`y` bases of `Σ'(W_n)`.
pub struct SigmaBasis {
    pub n: usize,
    pub comps: Vec<SComp>,
    pub index: HashMap<SComp, usize>,
    /// Index in `comps` of `𝐂(w)` for each group element.
    pub fiber_of: Vec<usize>,
    /// Group indices of `X_C`.
    pub x_support: Vec<Vec<usize>>,
    /// `(Mᵀ)⁻¹` where `M[C][D] = [C ← D]`; maps y-coordinates to x-coordinates.
    y_to_x: Matrix,
    structure: OnceLock<Vec<Vec<Vec<Rat>>>>,
}

/// Largest n with a cached `Σ'` basis.
pub const MAX_SIGMA_N: usize = 5;

static SIGMA: [OnceLock<SigmaBasis>; MAX_SIGMA_N + 1] =
    [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];

pub fn sigma_basis(n: usize) -> Result<&'static SigmaBasis> {
    check_envelope("descent algebra bases", n, MAX_SIGMA_N)?;
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    Ok(SIGMA[n].get_or_init(|| SigmaBasis::build(n)))
}

impl SigmaBasis {
    fn build(n: usize) -> Self {
        let g = group::table(n).expect("envelope checked");
        let comps = SComp::all(n);
        let index: HashMap<SComp, usize> = comps.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        let fiber_of = g.elems.iter().map(|w| index[&w.descent_composition()]).collect();
        let gens: Vec<_> = comps.iter().map(|c| c.generators()).collect();
        let x_support = gens
            .iter()
            .map(|s| {
                (0..g.size()).filter(|&i| s.iter().all(|&r| g.elems[i].is_ascent(r))).collect()
            })
            .collect();
        let m = comps.len();
        let mt: Matrix = (0..m)
            .map(|d| {
                (0..m)
                    .map(|c| if comps[c].left_arrow(&comps[d]) { Rat::one() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        let y_to_x = linalg::inverse(&mt).expect("x/y change of basis is unitriangular");
        SigmaBasis { n, comps, index, fiber_of, x_support, y_to_x, structure: OnceLock::new() }
    }

    /// Structure constants: `x_C x_D = Σ_E k[C][D][E] x_E`.
    pub fn structure_constants(&self) -> &Vec<Vec<Vec<Rat>>> {
        self.structure.get_or_init(|| {
            let g = group::table(self.n).unwrap();
            let m = self.comps.len();
            let mut out = vec![vec![Vec::new(); m]; m];
            for c in 0..m {
                for d in 0..m {
                    let mut acc = vec![0i64; g.size()];
                    for &i in &self.x_support[c] {
                        for &j in &self.x_support[d] {
                            acc[g.mul(i, j)] += 1;
                        }
                    }
                    let dense: Vec<Rat> = acc.into_iter().map(|v| Rat::from_integer(v.into())).collect();
                    out[c][d] = self.dense_to_x(&dense).expect("Σ' is closed under multiplication");
                }
            }
            out
        })
    }

    /// x-coordinates of a dense group-algebra vector, if it lies in `Σ'`.
    pub fn dense_to_x(&self, dense: &[Rat]) -> Option<Vec<Rat>> {
        let m = self.comps.len();
        let mut y: Vec<Option<Rat>> = vec![None; m];
        for (i, c) in dense.iter().enumerate() {
            let f = self.fiber_of[i];
            match &y[f] {
                None => y[f] = Some(c.clone()),
                Some(v) if v != c => return None,
                _ => {}
            }
        }
        let y: Vec<Rat> = y.into_iter().map(|v| v.unwrap_or_else(Rat::zero)).collect();
        Some(
            self.y_to_x
                .iter()
                .map(|row| row.iter().zip(&y).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    /// Product of two x-coordinate vectors using the structure constants.
    pub fn multiply_coords(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let k = self.structure_constants();
        let m = self.comps.len();
        let mut out = vec![Rat::zero(); m];
        for (c, ac) in a.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (d, bd) in b.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let f = ac * bd;
                for (e, v) in k[c][d].iter().enumerate() {
                    if !v.is_zero() {
                        out[e] += &f * v;
                    }
                }
            }
        }
        out
    }
}

/// Expresses `a` in the x-basis when `a ∈ Σ'(W_n)`.
pub fn to_sigma(a: &AlgElem) -> Result<Option<SigmaExpr>> {
    let sb = sigma_basis(a.n())?;
    Ok(sb.dense_to_x(&a.to_dense()?).map(|v| SigmaExpr::from_vec(a.n(), &v)))
}

/// Product in `Σ'(W_n)` via structure constants.
pub fn sigma_multiply(a: &SigmaExpr, b: &SigmaExpr) -> Result<SigmaExpr> {
    check_size(a.n, b.n)?;
    let sb = sigma_basis(a.n)?;
    Ok(SigmaExpr::from_vec(a.n, &sb.multiply_coords(&a.to_vec(), &b.to_vec())))
}

/// Differences `x_C − x_{λ̂}` with `𝝀(C) = λ`, `C ≠ λ̂`; a basis of `Ker θ_n`.
pub fn kernel_basis(n: usize) -> Result<Vec<SigmaExpr>> {
    check_envelope("kernel_basis", n, MAX_SIGMA_N)?;
    let mut out = Vec::new();
    for c in SComp::all(n) {
        let hat = c.bip().hat();
        if hat != c {
            let mut s = SigmaExpr::basis(&c);
            s.add_term(hat, -Rat::one());
            out.push(s);
        }
    }
    Ok(out)
}

/// Smallest `k` with `I^k = 0` for the two-sided ideal `I` of `ℚΣ'(W_n)`
/// generated by [`kernel_basis`], or `None` if no power vanishes.
pub fn kernel_nilpotency_index(n: usize) -> Result<Option<usize>> {
    check_envelope("radical_check", n, 4)?;
    let sb = sigma_basis(n)?;
    let m = sb.comps.len();
    let unit = |i: usize| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); m];
        v[i] = Rat::one();
        v
    };
    let mut ideal = Span::new();
    let mut frontier: Vec<Vec<Rat>> = Vec::new();
    for k in kernel_basis(n)? {
        let v = k.to_vec();
        if ideal.insert(&v) {
            frontier.push(v);
        }
    }
    while let Some(v) = frontier.pop() {
        for c in 0..m {
            for w in [sb.multiply_coords(&unit(c), &v), sb.multiply_coords(&v, &unit(c))] {
                if ideal.insert(&w) {
                    frontier.push(w);
                }
            }
        }
    }
    if ideal.dim() == 0 {
        return Ok(Some(1));
    }
    let base = ideal.basis();
    let mut power = base.clone();
    for k in 2..=m + 1 {
        let mut next = Span::new();
        for a in &power {
            for b in &base {
                next.insert(&sb.multiply_coords(a, b));
            }
        }
        if next.dim() == 0 {
            return Ok(Some(k));
        }
        if next.dim() == power.len() {
            return Ok(None);
        }
        power = next.basis();
    }
    Ok(None)
}

/// Whether the ideal generated by `Ker θ_n` is nilpotent.
pub fn radical_check(n: usize) -> Result<bool> {
    Ok(kernel_nilpotency_index(n)?.is_some())
}

/// The Gram matrix `[τ(x_C x_D)]` over `Comp(n)`.
pub fn gram_matrix(n: usize) -> Result<Matrix> {
    let xs: Vec<AlgElem> = SComp::all(n).iter().map(x_element).collect::<Result<_>>()?;
    xs.iter().map(|a| xs.iter().map(|b| tau(a, b)).collect()).collect()
}

/// Comp(n) grouped by `𝝀(C)`.
pub fn conjugacy_groups(n: usize) -> BTreeMap<Bip, Vec<SComp>> {
    let mut out: BTreeMap<Bip, Vec<SComp>> = BTreeMap::new();
    for c in SComp::all(n) {
        out.entry(c.bip()).or_default().push(c);
    }
    out
}

/// Whether every entry of `v` is a non-negative number.
pub fn is_nonnegative(v: &[Rat]) -> bool {
    v.iter().all(|x| !x.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn c(s: &str) -> SComp {
        s.parse().unwrap()
    }
    fn p(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }
    fn sum(n: usize, ws: &[&str]) -> AlgElem {
        AlgElem::indicator(n, &ws.iter().map(|s| p(s)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn basis_elements_in_w2() {
        assert_eq!(x_element(&c("-1,1")).unwrap(), sum(2, &["1 2", "2 1", "-1 2", "-2 1"]));
        assert_eq!(y_element(&c("-1,1")).unwrap(), sum(2, &["-1 2", "-2 1"]));
        assert_eq!(y_element(&c("3")).unwrap(), AlgElem::one(3));
        let want = sum(4, &["1 2 3 4", "1 3 2 4", "1 4 2 3", "2 3 1 4", "2 4 1 3", "3 4 1 2"]);
        assert_eq!(x_element(&c("2,2")).unwrap(), want);
    }

    #[test]
    fn multiplication_examples() {
        let x11 = x_element(&c("1,1")).unwrap();
        assert_eq!(x11.multiply(&x11).unwrap(), x11.scale(&rat(2)));
        let a = x_element(&c("-1,1")).unwrap();
        assert_eq!(x_element(&c("2")).unwrap().multiply(&a).unwrap(), a);
        let w2 = AlgElem::from_perm(&SignedPerm::longest(2));
        for cc in SComp::all(2) {
            let prod = w2.multiply(&x_element(&cc).unwrap()).unwrap();
            assert!(to_sigma(&prod).unwrap().is_some());
        }
        assert!(x11.multiply(&AlgElem::one(3)).is_err());
    }

    #[test]
    fn sigma_coordinates() {
        for cc in SComp::all(3) {
            assert_eq!(to_sigma(&x_element(&cc).unwrap()).unwrap(), Some(SigmaExpr::basis(&cc)));
        }
        let s = to_sigma(&AlgElem::from_perm(&p("2 1"))).unwrap().unwrap();
        let want = SigmaExpr::from_terms(2, [(c("1,1"), rat(1)), (c("2"), rat(-1))]).unwrap();
        assert_eq!(s, want);
        assert!(to_sigma(&AlgElem::from_perm(&p("-1 2"))).unwrap().is_none());
        let prod = x_element(&c("1,1")).unwrap().multiply(&x_element(&c("-2")).unwrap()).unwrap();
        let e = to_sigma(&prod).unwrap().unwrap();
        assert_eq!(e.to_alg().unwrap(), prod);
    }

    #[test]
    fn tau_counts_double_cosets() {
        assert_eq!(tau(&AlgElem::one(2), &AlgElem::one(2)).unwrap(), rat(1));
        for a in SComp::all(2) {
            for b in SComp::all(2) {
                let t = tau(&x_element(&a).unwrap(), &x_element(&b).unwrap()).unwrap();
                let d = cosets::double_coset_reps(&a, &b).unwrap().len();
                assert_eq!(t, rat(d as i64));
            }
        }
    }

    #[test]
    fn kernel_ranks() {
        assert!(kernel_basis(1).unwrap().is_empty());
        let k2 = kernel_basis(2).unwrap();
        assert_eq!(k2.len(), 1);
        let diff = SigmaExpr::from_terms(2, [(c("-1,1"), rat(1)), (c("1,-1"), rat(-1))]).unwrap();
        assert_eq!(k2[0], diff);
        assert_eq!(kernel_basis(3).unwrap().len(), 8);
    }

    #[test]
    fn radical_is_nilpotent_small() {
        assert!(radical_check(1).unwrap());
        assert!(radical_check(2).unwrap());
        assert!(radical_check(3).unwrap());
        assert!(radical_check(5).is_err());
    }

    #[test]
    fn structure_constants_match_group_product() {
        let sb = sigma_basis(3).unwrap();
        let k = sb.structure_constants();
        for (i, a) in sb.comps.iter().enumerate().step_by(5) {
            for (j, b) in sb.comps.iter().enumerate().step_by(3) {
                let direct = x_element(a).unwrap().multiply(&x_element(b).unwrap()).unwrap();
                assert_eq!(SigmaExpr::from_vec(3, &k[i][j]).to_alg().unwrap(), direct);
            }
        }
    }
}
