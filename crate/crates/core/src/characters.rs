//! Class functions on W_n, the morphism `θ`, the irreducible characters
//! `ξ_λ`, the character table of `Σ'(W_n)` and the primitive idempotents of
//! `Σ'(W_2)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{self, AlgElem, SigmaExpr};
use crate::comp::{Bip, Partition, SComp};
use crate::cosets;
use crate::error::{check_envelope, check_size, Error, Result};
use crate::group;
use crate::linalg::Span;
use crate::perm::{GenElem, SignedPerm};
use crate::{rat, Rat};

/// Largest n for which class data is cached.
pub const MAX_CLASS_N: usize = 5;

/// Conjugacy class data of W_n.
pub struct ClassData {
    pub n: usize,
    pub bips: Vec<Bip>,
    pub index: HashMap<Bip, usize>,
    /// Class index of each group element.
    pub class_of: Vec<usize>,
    pub class_size: Vec<usize>,
    /// Group index of the Coxeter element `c_λ`.
    pub rep: Vec<usize>,
}

static CLASSES: [OnceLock<ClassData>; MAX_CLASS_N + 1] =
    [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];

pub fn class_data(n: usize) -> Result<&'static ClassData> {
    check_envelope("class data", n, MAX_CLASS_N)?;
    Ok(CLASSES[n].get_or_init(|| {
        let g = group::table(n).expect("envelope checked");
        let bips = Bip::all(n);
        let index: HashMap<Bip, usize> = bips.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
        let class_of: Vec<usize> = g.elems.iter().map(|w| index[&w.cycle_type()]).collect();
        let mut class_size = vec![0; bips.len()];
        for &c in &class_of {
            class_size[c] += 1;
        }
        let rep = bips.iter().map(|b| g.index_of(&coxeter_element(b))).collect();
        ClassData { n, bips, index, class_of, class_size, rep }
    }))
}

/// `c_λ`: the product of `S_{λ̂}`, block by block, each block contributing
/// `s_a s_{a+1} ⋯ s_{b-1}` followed by `t_a` when the block is positive.
pub fn coxeter_element(lambda: &Bip) -> SignedPerm {
    let c = lambda.hat();
    let n = c.n();
    let mut w = SignedPerm::identity(n);
    if n == 0 {
        return SignedPerm::empty();
    }
    for (a, b, pos) in c.blocks() {
        for i in a..b {
            w = w.compose_unchecked(&GenElem::S(i).to_perm(n).unwrap());
        }
        if pos {
            w = w.compose_unchecked(&GenElem::T(a).to_perm(n).unwrap());
        }
    }
    w
}

/// A rational-valued class function on W_n.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct ClassFn {
    pub n: usize,
    pub values: BTreeMap<Bip, Rat>,
}

impl ClassFn {
    pub fn from_fn(n: usize, mut f: impl FnMut(&Bip) -> Rat) -> Self {
        ClassFn { n, values: Bip::all(n).iter().map(|b| (b.clone(), f(b))).collect() }
    }

    pub fn new(n: usize, values: BTreeMap<Bip, Rat>) -> Result<Self> {
        let all = Bip::all(n);
        if values.len() != all.len() || all.iter().any(|b| !values.contains_key(b)) {
            return Err(Error::Precondition(format!("class function must be defined on all of Bip({n})")));
        }
        Ok(ClassFn { n, values })
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| Rat::zero())
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |_| Rat::one())
    }

    /// `ε_n = (-1)^ℓ`.
    pub fn sign(n: usize) -> Self {
        Self::from_fn(n, |b| if coxeter_element(b).length().is_multiple_of(2) { rat(1) } else { rat(-1) })
    }

    /// Indicator of the class `𝒞_λ`.
    pub fn indicator(lambda: &Bip) -> Self {
        Self::from_fn(lambda.size(), |b| if b == lambda { rat(1) } else { rat(0) })
    }

    pub fn value(&self, lambda: &Bip) -> Rat {
        self.values.get(lambda).cloned().unwrap_or_else(Rat::zero)
    }

    /// Value on the identity.
    pub fn degree(&self) -> Rat {
        self.value(&SignedPerm::identity(self.n).cycle_type())
    }

    pub fn add(&self, other: &ClassFn) -> Result<ClassFn> {
        check_size(self.n, other.n)?;
        Ok(Self::from_fn(self.n, |b| self.value(b) + other.value(b)))
    }

    pub fn sub(&self, other: &ClassFn) -> Result<ClassFn> {
        check_size(self.n, other.n)?;
        Ok(Self::from_fn(self.n, |b| self.value(b) - other.value(b)))
    }

    pub fn scale(&self, k: &Rat) -> ClassFn {
        Self::from_fn(self.n, |b| self.value(b) * k)
    }

    /// Pointwise (tensor) product.
    pub fn mul(&self, other: &ClassFn) -> Result<ClassFn> {
        check_size(self.n, other.n)?;
        Ok(Self::from_fn(self.n, |b| self.value(b) * other.value(b)))
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(|v| v.is_zero())
    }

    /// Linear extension to ℚW_n: `Σ a_w f(w)`.
    pub fn eval(&self, a: &AlgElem) -> Result<Rat> {
        check_size(self.n, a.n())?;
        Ok(a.terms().map(|(w, c)| c * self.value(&w.cycle_type())).sum())
    }

    pub fn to_vec(&self) -> Vec<Rat> {
        Bip::all(self.n).iter().map(|b| self.value(b)).collect()
    }
}

impl fmt::Display for ClassFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in Bip::all(self.n) {
            writeln!(f, "{b} : {}", self.value(&b))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ClassFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.to_vec().iter().map(|x| x.to_string()).collect();
        write!(f, "ClassFn[{}]({})", self.n, v.join(", "))
    }
}

/// `⟨f, g⟩ = |W_n|⁻¹ Σ_λ |𝒞_λ| f(λ) g(λ)`.
pub fn inner(f: &ClassFn, g: &ClassFn) -> Result<Rat> {
    check_size(f.n, g.n)?;
    let cd = class_data(f.n)?;
    let total: Rat = cd
        .bips
        .iter()
        .enumerate()
        .map(|(i, b)| rat(cd.class_size[i] as i64) * f.value(b) * g.value(b))
        .sum();
    Ok(total / rat(group::order(f.n) as i64))
}

/// `Ind_{W_C}^{W_n} ψ`, by summing `ψ(x⁻¹ g x)` over the representatives
/// `x ∈ X_C` with `x⁻¹ g x ∈ W_C`.
pub fn induce(c: &SComp, mut psi: impl FnMut(&SignedPerm) -> Rat) -> Result<ClassFn> {
    let n = c.n();
    let cd = class_data(n)?;
    let g = group::table(n)?;
    let xs: Vec<usize> = cosets::x_set(c)?.iter().map(|x| g.index_of(x)).collect();
    let mut values = BTreeMap::new();
    for (i, b) in cd.bips.iter().enumerate() {
        let r = cd.rep[i];
        let mut v = Rat::zero();
        for &x in &xs {
            let conj = g.mul(g.mul(g.inv[x], r), x);
            let y = &g.elems[conj];
            if c.contains(y) {
                v += psi(y);
            }
        }
        values.insert(b.clone(), v);
    }
    Ok(ClassFn { n, values })
}

/// `θ(x_C) = Ind_{W_C}^{W_n} 1`.
pub fn induced_trivial(c: &SComp) -> Result<ClassFn> {
    induce(c, |_| Rat::one())
}

/// Linear extension of [`induced_trivial`] to `Σ'(W_n)`.
pub fn theta(a: &SigmaExpr) -> Result<ClassFn> {
    let mut out = ClassFn::zero(a.n);
    for (c, k) in &a.x_coords {
        out = out.add(&induced_trivial(c)?.scale(k))?;
    }
    Ok(out)
}

/// `θ(a)` for a group-algebra element lying in `Σ'(W_n)`.
pub fn theta_alg(a: &AlgElem) -> Result<ClassFn> {
    let s = algebra::to_sigma(a)?.ok_or_else(|| Error::Precondition("element is not in Σ'".into()))?;
    theta(&s)
}

/// Character `χ_μ` of the symmetric group at the class of cycle type `rho`,
/// by the Murnaghan–Nakayama rule on beta-sets.
pub fn symmetric_group_character(mu: &Partition, rho: &Partition) -> Result<i64> {
    check_size(mu.size(), rho.size())?;
    let len = mu.len();
    let beta: Vec<usize> = mu.parts().iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    Ok(mn(beta, rho.parts()))
}

fn mn(beta: Vec<usize>, rho: &[usize]) -> i64 {
    let Some((&r, rest)) = rho.split_first() else { return 1 };
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(next, rest);
    }
    total
}

/// Cycle type of `|w|` with signs forgotten.
pub fn unsigned_cycle_type(w: &SignedPerm) -> Partition {
    let ct = w.cycle_type();
    Partition::from_unsorted(ct.plus.parts().iter().chain(ct.minus.parts()).copied().collect())
}

/// Restriction of `w ∈ W_{(k, l)}` to `(u, v) ∈ W_k × W_l`.
pub fn split_cross(w: &SignedPerm, k: usize) -> (SignedPerm, SignedPerm) {
    let off = k as i32;
    let u = w.window()[..k].to_vec();
    let v = w.window()[k..].iter().map(|&x| if x > 0 { x - off } else { x + off }).collect();
    (SignedPerm::from_window_unchecked(u), SignedPerm::from_window_unchecked(v))
}

/// `ξ_λ = Ind_{W_{k,l}}^{W_n}(p_k^* χ_{λ^+} ⊠ ε_l · p_l^* χ_{λ^-})`.
pub fn irreducible(lambda: &Bip) -> Result<ClassFn> {
    let k = lambda.plus.size();
    let l = lambda.minus.size();
    let c = SComp::from_parts_dropping_zeros([k as i32, l as i32])?;
    induce(&c, |w| {
        let (u, v) = split_cross(w, k);
        let a = symmetric_group_character(&lambda.plus, &unsigned_cycle_type(&u)).unwrap();
        let b = symmetric_group_character(&lambda.minus, &unsigned_cycle_type(&v)).unwrap();
        let sign = if v.length() % 2 == 0 { 1 } else { -1 };
        rat(a * b * sign)
    })
}

/// Multiplicities `⟨f, ξ_λ⟩` over Bip(n).
pub fn decompose(f: &ClassFn) -> Result<BTreeMap<Bip, Rat>> {
    Bip::all(f.n).into_iter().map(|b| Ok((b.clone(), inner(f, &irreducible(&b)?)?))).collect()
}

/// `π_λ(x_{μ̂}) = (Ind_{W_{μ̂}} 1)(c_λ)`; rows `λ`, columns `μ`, both in Bip order.
pub fn sigma_character_table(n: usize) -> Result<Vec<Vec<Rat>>> {
    check_envelope("sigma_character_table", n, 5)?;
    let bips = Bip::all(n);
    let cols: Vec<ClassFn> = bips.iter().map(|m| induced_trivial(&m.hat())).collect::<Result<_>>()?;
    Ok(bips.iter().map(|l| cols.iter().map(|f| f.value(l)).collect()).collect())
}

/// `λ ⊂ μ`: some conjugate of `W_{μ̂}` contains `W_{λ̂}`.
pub fn bip_contained(lambda: &Bip, mu: &Bip) -> Result<bool> {
    check_size(lambda.size(), mu.size())?;
    let n = lambda.size();
    let gens: Vec<SignedPerm> =
        lambda.hat().generators().into_iter().map(|r| r.to_perm(n).unwrap()).collect();
    let mh = mu.hat();
    let g = group::table(n)?;
    Ok(g.elems.iter().any(|w| {
        let winv = w.inverse();
        gens.iter().all(|r| mh.contains(&winv.compose_unchecked(r).compose_unchecked(w)))
    }))
}

/// A family of idempotents of `ℚΣ'(W_n)` indexed by Bip(n).
#[derive(Clone, Debug, Serialize)]
pub struct IdempotentSet {
    pub n: usize,
    pub elems: BTreeMap<Bip, SigmaExpr>,
}

/// The five orthogonal primitive idempotents of `ℚΣ'(W_2)`.
pub fn w2_idempotents() -> IdempotentSet {
    let c = |s: &str| s.parse::<SComp>().unwrap();
    let b = |s: &str| s.parse::<Bip>().unwrap();
    let q = crate::frac;
    let e = |terms: &[(&str, Rat)]| {
        SigmaExpr::from_terms(2, terms.iter().map(|(s, k)| (c(s), k.clone()))).unwrap()
    };
    let mut elems = BTreeMap::new();
    elems.insert(
        b("2|"),
        e(&[
            ("2", rat(1)),
            ("-2", q(-1, 2)),
            ("1,-1", q(-1, 4)),
            ("-1,1", q(1, 4)),
            ("1,1", q(-1, 2)),
            ("-1,-1", q(1, 4)),
        ]),
    );
    elems.insert(
        b("1,1|"),
        e(&[("1,1", q(1, 2)), ("1,-1", q(-1, 4)), ("-1,1", q(-1, 4)), ("-1,-1", q(1, 8))]),
    );
    elems.insert(b("1|1"), e(&[("1,-1", q(1, 2)), ("-1,-1", q(-1, 4))]));
    elems.insert(b("|2"), e(&[("-2", q(1, 2)), ("-1,-1", q(-1, 4))]));
    elems.insert(b("|1,1"), e(&[("-1,-1", q(1, 8))]));
    IdempotentSet { n: 2, elems }
}

/// Idempotents for W_n; only `n = 2` is available.
pub fn idempotents(n: usize) -> Result<IdempotentSet> {
    if n == 2 {
        Ok(w2_idempotents())
    } else {
        Err(Error::Precondition(format!("explicit idempotents are only available for n = 2, got {n}")))
    }
}

/// `θ(x) = |W| Σ_λ τ(x E_λ)/|𝒞_λ| · f_λ`, for a family of idempotents.
pub fn theta_by_idempotents(x: &SigmaExpr, e: &IdempotentSet) -> Result<ClassFn> {
    let cd = class_data(x.n)?;
    let xa = x.to_alg()?;
    let order = rat(group::order(x.n) as i64);
    let mut values = BTreeMap::new();
    for (i, b) in cd.bips.iter().enumerate() {
        let eb = e.elems[b].to_alg()?;
        let t = algebra::tau(&xa, &eb)?;
        values.insert(b.clone(), &order * t / rat(cd.class_size[i] as i64));
    }
    ClassFn::new(x.n, values)
}

/// `γ_{λμ} = dim E_λ Σ' E_μ`, rows `λ`, columns `μ` in Bip order.
pub fn cartan_matrix(e: &IdempotentSet) -> Result<Vec<Vec<usize>>> {
    let n = e.n;
    let sb = algebra::sigma_basis(n)?;
    let m = sb.comps.len();
    let bips = Bip::all(n);
    let mut out = Vec::new();
    for l in &bips {
        let el = e.elems[l].to_vec();
        let mut row = Vec::new();
        for mu in &bips {
            let em = e.elems[mu].to_vec();
            let mut span = Span::new();
            for c in 0..m {
                let mut unit = vec![Rat::zero(); m];
                unit[c] = Rat::one();
                span.insert(&sb.multiply_coords(&sb.multiply_coords(&el, &unit), &em));
            }
            row.push(span.dim());
        }
        out.push(row);
    }
    Ok(out)
}

/// Checks of the decomposition `ℚΣ'(W_2) ≅ ℚ ⊕ ℚ ⊕ ℚ ⊕ B`, `B` the upper
/// triangular 2×2 matrices, as labelled booleans.
///
/// The central idempotents are `E_2`, `E_{1,1}`, `E_0 = E_{1,-1} + E_{-2}` and
/// `E_{-1,-1}`; `A_0 = ℚΣ'E_0` has basis `a = E_{1,-1}`, `c = E_{-2}`,
/// `b = x_{1,-1} − x_{-1,1}` with `σ(a) = e_11`, `σ(c) = e_22`, `σ(b) = e_12`.
pub fn w2_algebra_decomposition() -> Result<Vec<(String, bool)>> {
    let e = w2_idempotents();
    let b = |s: &str| s.parse::<Bip>().unwrap();
    let c = |s: &str| s.parse::<SComp>().unwrap();
    let mul = |x: &SigmaExpr, y: &SigmaExpr| algebra::sigma_multiply(x, y);
    let e0 = e.elems[&b("1|1")].add(&e.elems[&b("|2")])?;
    let central = [e.elems[&b("2|")].clone(), e.elems[&b("1,1|")].clone(), e0.clone(), e.elems[&b("|1,1")].clone()];
    let mut out = Vec::new();
    let mut all_central = true;
    for z in &central {
        for comp in SComp::all(2) {
            let x = SigmaExpr::basis(&comp);
            all_central &= mul(z, &x)? == mul(&x, z)?;
        }
    }
    out.push(("central idempotents E_2, E_{1,1}, E_{1,-1}+E_{-2}, E_{-1,-1}".to_string(), all_central));
    let mut sum = SigmaExpr::zero(2);
    let mut orth = true;
    for (i, x) in central.iter().enumerate() {
        sum = sum.add(x)?;
        for (j, y) in central.iter().enumerate() {
            let p = mul(x, y)?;
            orth &= if i == j { &p == x } else { p.is_zero() };
        }
    }
    out.push(("central idempotents orthogonal with sum 1".to_string(), orth && sum == SigmaExpr::basis(&c("2"))));
    // A_2, A_{1,1}, A_{-1,-1} are one-dimensional.
    let dims: Vec<usize> = central
        .iter()
        .map(|z| {
            let mut span = Span::new();
            for comp in SComp::all(2) {
                span.insert(&mul(&SigmaExpr::basis(&comp), z).unwrap().to_vec());
            }
            span.dim()
        })
        .collect();
    out.push(("dimensions of the blocks are 1, 1, 3, 1".to_string(), dims == vec![1, 1, 3, 1]));
    let ea = e.elems[&b("1|1")].clone();
    let ec = e.elems[&b("|2")].clone();
    let eb = SigmaExpr::basis(&c("1,-1")).sub(&SigmaExpr::basis(&c("-1,1")))?;
    let basis = [ea, eb, ec];
    // σ images: a = e11, b = e12, c = e22; e_ij e_kl = δ_jk e_il.
    let unit = [(0usize, 0usize), (0, 1), (1, 1)];
    let mut hom = true;
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            let (p, q) = unit[i];
            let (r, t) = unit[j];
            let expected = if q == r { basis[unit.iter().position(|&u| u == (p, t)).unwrap()].clone() } else { SigmaExpr::zero(2) };
            hom &= mul(x, y)? == expected;
        }
    }
    let mut span = Span::new();
    for x in &basis {
        span.insert(&x.to_vec());
    }
    let in_block = basis.iter().all(|x| mul(x, &e0).map(|y| &y == x).unwrap_or(false));
    out.push(("A_0 = span(E_{1,-1}, E_{-2}, x_{1,-1} - x_{-1,1}) is isomorphic to B".to_string(), hom && in_block && span.dim() == 3));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> Bip {
        s.parse().unwrap()
    }
    fn c(s: &str) -> SComp {
        s.parse().unwrap()
    }
    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn w2_decomposition_holds() {
        for (label, ok) in w2_algebra_decomposition().unwrap() {
            assert!(ok, "{label}");
        }
    }

    #[test]
    fn coxeter_elements_of_w2() {
        let names = [("2|", "-2 1"), ("1,1|", "-1 -2"), ("1|1", "-1 2"), ("|2", "2 1"), ("|1,1", "1 2")];
        for (l, w) in names {
            assert_eq!(coxeter_element(&b(l)).to_string(), w);
        }
        for n in 1..=5 {
            for l in Bip::all(n) {
                assert_eq!(coxeter_element(&l).cycle_type(), l);
            }
        }
        assert_eq!(class_data(2).unwrap().class_size, vec![2, 1, 2, 2, 1]);
    }

    #[test]
    fn class_counts_and_sizes() {
        for n in 1..=5 {
            let cd = class_data(n).unwrap();
            assert_eq!(cd.class_size.iter().sum::<usize>(), group::order(n));
            assert!(cd.class_size.iter().all(|&s| s > 0));
        }
    }

    #[test]
    fn murnaghan_nakayama() {
        for m in 1..=6 {
            let id = Partition::from_unsorted(vec![1; m]);
            let total: i64 =
                Partition::all(m).iter().map(|mu| symmetric_group_character(mu, &id).unwrap().pow(2)).sum();
            assert_eq!(total, (1..=m as i64).product::<i64>());
            for rho in Partition::all(m) {
                assert_eq!(symmetric_group_character(&Partition::from_unsorted(vec![m]), &rho).unwrap(), 1);
                let odd = rho.parts().iter().map(|p| p - 1).sum::<usize>() % 2;
                let sgn = if odd == 0 { 1 } else { -1 };
                assert_eq!(symmetric_group_character(&id, &rho).unwrap(), sgn);
            }
        }
        assert_eq!(symmetric_group_character(&part("2,1"), &part("3")).unwrap(), -1);
        assert!(symmetric_group_character(&part("2"), &part("1")).is_err());
    }

    #[test]
    fn table_five() {
        let t = sigma_character_table(2).unwrap();
        let want = [[1, 0, 0, 0, 0], [1, 2, 0, 0, 0], [1, 2, 2, 0, 0], [1, 0, 0, 2, 0], [1, 2, 4, 4, 8]];
        for (row, w) in t.iter().zip(want) {
            assert_eq!(row, &w.iter().map(|&x| rat(x)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn irreducibles_are_orthonormal() {
        for n in 1..=3 {
            let irr: Vec<ClassFn> = Bip::all(n).iter().map(|l| irreducible(l).unwrap()).collect();
            for (i, f) in irr.iter().enumerate() {
                assert!(f.degree() > Rat::zero());
                for (j, g) in irr.iter().enumerate() {
                    assert_eq!(inner(f, g).unwrap(), rat((i == j) as i64));
                }
            }
        }
        assert_eq!(irreducible(&b("3|")).unwrap(), ClassFn::trivial(3));
    }

    #[test]
    fn asymmetry_of_evaluation() {
        let t2bar = induced_trivial(&c("-2")).unwrap();
        let t11 = induced_trivial(&c("1,1")).unwrap();
        let x11 = algebra::x_element(&c("1,1")).unwrap();
        let x2bar = algebra::x_element(&c("-2")).unwrap();
        assert_eq!(t2bar.eval(&x11).unwrap(), rat(6));
        assert_eq!(t11.eval(&x2bar).unwrap(), rat(4));
    }

    #[test]
    fn idempotents_of_w2() {
        let e = w2_idempotents();
        let sb = algebra::sigma_basis(2).unwrap();
        let one = SigmaExpr::basis(&c("2"));
        let mut sum = SigmaExpr::zero(2);
        for (l, el) in &e.elems {
            sum = sum.add(el).unwrap();
            for (m, em) in &e.elems {
                let prod = SigmaExpr::from_vec(2, &sb.multiply_coords(&el.to_vec(), &em.to_vec()));
                let want = if l == m { el.clone() } else { SigmaExpr::zero(2) };
                assert_eq!(prod, want, "{l} {m}");
            }
            assert_eq!(theta(el).unwrap(), ClassFn::indicator(l));
        }
        assert_eq!(sum, one);
        assert!(idempotents(3).is_err());
    }

    #[test]
    fn cartan_of_w2() {
        let got = cartan_matrix(&w2_idempotents()).unwrap();
        let mut want = vec![vec![0; 5]; 5];
        for (i, row) in want.iter_mut().enumerate() {
            row[i] = 1;
        }
        want[2][3] = 1;
        assert_eq!(got, want);
    }

    #[test]
    fn theta_of_named_elements() {
        let w2 = AlgElem::from_perm(&SignedPerm::longest(3));
        assert_eq!(theta_alg(&w2).unwrap(), ClassFn::sign(3));
        assert_eq!(induced_trivial(&c("3")).unwrap(), ClassFn::trivial(3));
    }
}
