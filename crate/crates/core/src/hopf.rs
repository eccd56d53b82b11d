//! The graded Hopf algebra `SP = ⊕ ℚW_n` of signed permutations, its
//! sub-Hopf algebras `Σ'` and `Q`, and the character Hopf algebra.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{self, AlgElem};
use crate::characters::{self, ClassFn};
use crate::comp::{Bip, SComp};
use crate::cosets;
use crate::error::{check_envelope, check_size, Error, Result};
use crate::group;
use crate::perm::SignedPerm;
use crate::rsk::{self, CoplacticElem};
use crate::verify::Check;
use crate::Rat;

/// Largest total grade handled by [`verify_bialgebra`].
pub const MAX_HOPF_GRADE: usize = 4;

/// A finitely supported element of `SP`, one component per grade.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GradedElem {
    pub components: BTreeMap<usize, AlgElem>,
}

impl GradedElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_alg(a: AlgElem) -> Self {
        let mut g = Self::zero();
        g.add(&a);
        g
    }

    pub fn from_perm(w: &SignedPerm) -> Self {
        Self::from_alg(AlgElem::from_perm(w))
    }

    pub fn component(&self, n: usize) -> AlgElem {
        self.components.get(&n).cloned().unwrap_or_else(|| AlgElem::zero(n))
    }

    pub fn add(&mut self, a: &AlgElem) {
        let n = a.n();
        let sum = self.component(n).add(a).expect("same grade");
        if sum.is_zero() {
            self.components.remove(&n);
        } else {
            self.components.insert(n, sum);
        }
    }

    /// `Σ_{u,v} a_u b_v u * v`.
    pub fn product(&self, other: &GradedElem) -> GradedElem {
        let mut out = GradedElem::zero();
        for a in self.components.values() {
            for b in other.components.values() {
                out.add(&alg_product(a, b));
            }
        }
        out
    }

    pub fn coproduct(&self) -> TensorElem {
        let mut out = TensorElem::zero();
        for a in self.components.values() {
            out.add(&alg_coproduct(a));
        }
        out
    }
}

impl fmt::Display for GradedElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return writeln!(f, "0");
        }
        for a in self.components.values() {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// A finitely supported element of `SP ⊗ SP`.
#[derive(Clone, PartialEq, Eq, Default, Serialize)]
pub struct TensorElem {
    pub terms: BTreeMap<(SignedPerm, SignedPerm), Rat>,
}

impl TensorElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, u: SignedPerm, v: SignedPerm, c: Rat) {
        if c.is_zero() {
            return;
        }
        let key = (u, v);
        let e = self.terms.entry(key.clone()).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&mut self, other: &TensorElem) {
        for ((u, v), c) in &other.terms {
            self.add_term(u.clone(), v.clone(), c.clone());
        }
    }

    pub fn coeff(&self, u: &SignedPerm, v: &SignedPerm) -> Rat {
        self.terms.get(&(u.clone(), v.clone())).cloned().unwrap_or_else(Rat::zero)
    }

    /// `(a ⊗ b)(c ⊗ d) = (a * c) ⊗ (b * d)`.
    pub fn product(&self, other: &TensorElem) -> TensorElem {
        let mut out = TensorElem::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                let left = hopf_product(a, c);
                let right = hopf_product(b, d);
                for (l, p) in left.terms() {
                    for (r, q) in right.terms() {
                        out.add_term(l.clone(), r.clone(), x * y * p * q);
                    }
                }
            }
        }
        out
    }

    /// Terms grouped by the grade of the left factor.
    pub fn by_left_grade(&self) -> BTreeMap<usize, Vec<(&SignedPerm, &SignedPerm, &Rat)>> {
        let mut out: BTreeMap<usize, Vec<_>> = BTreeMap::new();
        for ((u, v), c) in &self.terms {
            out.entry(u.n()).or_default().push((u, v, c));
        }
        out
    }
}

impl fmt::Display for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for ((u, v), c) in &self.terms {
            writeln!(f, "({u} ⊗ {v}) : {c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Signed standardization: letters are ranked by absolute value, ties
/// broken left to right, and each letter keeps its sign.
pub fn standardize(word: &[i32]) -> Result<SignedPerm> {
    if word.contains(&0) {
        return Err(Error::InvalidPerm("zero letter in word".into()));
    }
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| (word[i].unsigned_abs(), i));
    let mut window = vec![0i32; word.len()];
    for (rank, &i) in order.iter().enumerate() {
        let r = rank as i32 + 1;
        window[i] = if word[i] > 0 { r } else { -r };
    }
    SignedPerm::new_allow_empty(window)
}

/// Letters of `w` whose absolute value lies in `[lo, hi]`, in position order.
pub fn restrict(w: &SignedPerm, lo: usize, hi: usize) -> Vec<i32> {
    w.window().iter().copied().filter(|x| (lo..=hi).contains(&(x.unsigned_abs() as usize))).collect()
}

fn relabel<'a>(w: &'a SignedPerm, labels: &'a [usize]) -> impl Iterator<Item = i32> + 'a {
    w.window().iter().map(move |&x| {
        let y = labels[x.unsigned_abs() as usize - 1] as i32;
        if x > 0 {
            y
        } else {
            -y
        }
    })
}

/// `u * v` as the shifted shuffle: the values of `u` are relabelled by a
/// subset `A ⊂ [1, n+m]` of size `n`, those of `v` by its complement.
pub fn hopf_product(u: &SignedPerm, v: &SignedPerm) -> AlgElem {
    let (n, m) = (u.n(), v.n());
    let mut out = AlgElem::zero(n + m);
    for a in (1..=n + m).combinations(n) {
        let b: Vec<usize> = (1..=n + m).filter(|x| !a.contains(x)).collect();
        let window: Vec<i32> = relabel(u, &a).chain(relabel(v, &b)).collect();
        out.add_term(SignedPerm::from_window_unchecked(window), Rat::one());
    }
    out
}

/// `u * v = x_{(n,m)} · (u × v)` computed in `ℚW_{n+m}`.
pub fn hopf_product_literal(u: &SignedPerm, v: &SignedPerm) -> Result<AlgElem> {
    let (n, m) = (u.n(), v.n());
    if n == 0 || m == 0 {
        return Ok(AlgElem::from_perm(&u.cross(v)));
    }
    let c = SComp::new(vec![n as i32, m as i32])?;
    algebra::x_element(&c)?.multiply(&AlgElem::from_perm(&u.cross(v)))
}

/// Bilinear extension of [`hopf_product`] to homogeneous elements.
pub fn alg_product(a: &AlgElem, b: &AlgElem) -> AlgElem {
    let mut out = AlgElem::zero(a.n() + b.n());
    for (u, x) in a.terms() {
        for (v, y) in b.terms() {
            for (w, z) in hopf_product(u, v).terms() {
                out.add_term(w.clone(), x * y * z);
            }
        }
    }
    out
}

/// `Δ(w) = Σ_i w|[1,i] ⊗ std(w|[i+1,n])`.
pub fn hopf_coproduct(w: &SignedPerm) -> TensorElem {
    let n = w.n();
    let mut out = TensorElem::zero();
    for i in 0..=n {
        let left = SignedPerm::from_window_unchecked(restrict(w, 1, i));
        let right = standardize(&restrict(w, i + 1, n)).expect("nonzero letters");
        out.add_term(left, right, Rat::one());
    }
    out
}

/// `Δ(w) = Σ_i u_i ⊗ v_i` where `w = (u_i × v_i) x` with `x⁻¹ ∈ X_{(i, n−i)}`.
pub fn hopf_coproduct_by_cosets(w: &SignedPerm) -> Result<TensorElem> {
    let n = w.n();
    let mut out = TensorElem::zero();
    for i in 0..=n {
        if i == 0 || i == n {
            let (u, v) = if i == 0 { (SignedPerm::empty(), w.clone()) } else { (w.clone(), SignedPerm::empty()) };
            out.add_term(u, v, Rat::one());
            continue;
        }
        let c = SComp::new(vec![i as i32, (n - i) as i32])?;
        let found: Vec<SignedPerm> = cosets::x_set(&c)?
            .into_iter()
            .map(|x| w.compose_unchecked(&x))
            .filter(|y| c.contains(y))
            .collect();
        if found.len() != 1 {
            return Err(Error::Precondition(format!("{w} has {} decompositions at {i}", found.len())));
        }
        let (u, v) = characters::split_cross(&found[0], i);
        out.add_term(u, v, Rat::one());
    }
    Ok(out)
}

/// Linear extension of [`hopf_coproduct`].
pub fn alg_coproduct(a: &AlgElem) -> TensorElem {
    let mut out = TensorElem::zero();
    for (w, c) in a.terms() {
        for ((u, v), d) in &hopf_coproduct(w).terms {
            out.add_term(u.clone(), v.clone(), c * d);
        }
    }
    out
}

/// `χ • ψ = Ind_{W_{k,l}}^{W_{k+l}} (χ ⊠ ψ)`.
pub fn char_product(f: &ClassFn, g: &ClassFn) -> Result<ClassFn> {
    let (k, l) = (f.n, g.n);
    if k == 0 {
        return Ok(g.scale(&f.value(&Bip::all(0)[0])));
    }
    if l == 0 {
        return Ok(f.scale(&g.value(&Bip::all(0)[0])));
    }
    let c = SComp::new(vec![k as i32, l as i32])?;
    characters::induce(&c, |w| {
        let (u, v) = characters::split_cross(w, k);
        f.value(&u.cycle_type()) * g.value(&v.cycle_type())
    })
}

/// `Res_{W_{i,n−i}} f` for every `i`, as values on pairs of classes.
pub fn char_coproduct(f: &ClassFn) -> BTreeMap<(Bip, Bip), Rat> {
    let n = f.n;
    let mut out = BTreeMap::new();
    for i in 0..=n {
        for l in Bip::all(i) {
            for m in Bip::all(n - i) {
                let w = characters::coxeter_element(&l).cross(&characters::coxeter_element(&m));
                out.insert((l.clone(), m), f.value(&w.cycle_type()));
            }
        }
    }
    out
}

fn class_sizes(n: usize) -> Result<BTreeMap<Bip, usize>> {
    if n == 0 {
        return Ok(BTreeMap::from([(Bip::all(0)[0].clone(), 1)]));
    }
    let cd = characters::class_data(n)?;
    Ok(cd.bips.iter().cloned().zip(cd.class_size.iter().copied()).collect())
}

/// `⟨χ ⊗ ψ, Res ζ⟩_⊗` on `W_k × W_l`.
pub fn tensor_inner(f: &ClassFn, g: &ClassFn, zeta: &ClassFn) -> Result<Rat> {
    check_size(f.n + g.n, zeta.n)?;
    let res = char_coproduct(zeta);
    let (sk, sl) = (class_sizes(f.n)?, class_sizes(g.n)?);
    let mut total = Rat::zero();
    for (l, a) in &sk {
        for (m, b) in &sl {
            total += Rat::from_integer(((a * b) as i64).into())
                * f.value(l)
                * g.value(m)
                * &res[&(l.clone(), m.clone())];
        }
    }
    Ok(total / Rat::from_integer(((group::order(f.n) * group::order(g.n)) as i64).into()))
}

/// Splits a tensor of total grade `n` into coefficient matrices per left grade.
fn blocks(t: &TensorElem, n: usize) -> Result<Vec<(usize, Vec<Vec<Rat>>)>> {
    let mut out = Vec::new();
    for i in 0..=n {
        let (gl, gr) = (group::table(i)?, group::table(n - i)?);
        let mut m = vec![vec![Rat::zero(); gr.size()]; gl.size()];
        for ((u, v), c) in &t.terms {
            if u.n() == i {
                check_size(v.n(), n - i)?;
                m[gl.index_of(u)][gr.index_of(v)] = c.clone();
            }
        }
        out.push((i, m));
    }
    Ok(out)
}

fn in_sigma(n: usize, dense: &[Rat]) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    Ok(algebra::sigma_basis(n)?.dense_to_x(dense).is_some())
}

fn in_q(n: usize, dense: &[Rat]) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    Ok(CoplacticElem::from_alg(&AlgElem::from_dense(n, dense)?)?.is_some())
}

/// Whether a tensor of total grade `n` lies in `A ⊗ A` for the subspace
/// test `member`: every column and every row of each block must lie in it.
fn tensor_in(t: &TensorElem, n: usize, member: fn(usize, &[Rat]) -> Result<bool>) -> Result<bool> {
    for (i, m) in blocks(t, n)? {
        let cols = crate::linalg::transpose(&m);
        for col in &cols {
            if !member(i, col)? {
                return Ok(false);
            }
        }
        for row in &m {
            if !member(n - i, row)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(θ ⊗ θ)(t)` for `t ∈ Σ' ⊗ Σ'` of total grade `n`, keyed by class pairs.
fn theta_tensor(t: &TensorElem, n: usize, tilde: bool) -> Result<BTreeMap<(Bip, Bip), Rat>> {
    let theta_of = |i: usize, dense: &[Rat]| -> Result<ClassFn> {
        if i == 0 {
            return Ok(ClassFn::trivial(0).scale(&dense[0]));
        }
        let a = AlgElem::from_dense(i, dense)?;
        if tilde {
            rsk::theta_tilde_alg(&a)
        } else {
            characters::theta_alg(&a)
        }
    };
    let mut out = BTreeMap::new();
    for (i, m) in blocks(t, n)? {
        let gr = group::table(n - i)?;
        // (θ ⊗ id): each column becomes a class function of W_i.
        let cols = crate::linalg::transpose(&m);
        let col_theta: Vec<ClassFn> = cols.iter().map(|c| theta_of(i, c)).collect::<Result<_>>()?;
        for l in Bip::all(i) {
            let row: Vec<Rat> = (0..gr.size()).map(|j| col_theta[j].value(&l)).collect();
            let f = theta_of(n - i, &row)?;
            for mu in Bip::all(n - i) {
                out.insert((l.clone(), mu.clone()), f.value(&mu));
            }
        }
    }
    Ok(out)
}

fn grade_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|a| {
            grade_compositions(total - a, parts - 1).into_iter().map(move |mut r| {
                r.insert(0, a);
                r
            })
        })
        .collect()
}

fn all_perms(n: usize) -> Vec<SignedPerm> {
    if n == 0 {
        vec![SignedPerm::empty()]
    } else {
        SignedPerm::all(n)
    }
}

/// Bialgebra axioms and the compatibility of `θ`, `θ̃` on all basis elements
/// of total grade at most `max_grade`.
pub fn verify_bialgebra(max_grade: usize) -> Result<Vec<Check>> {
    check_envelope("verify_bialgebra", max_grade, MAX_HOPF_GRADE)?;
    let mut out = Vec::new();
    let ck = |label: &str, n: usize, ok: bool, detail: String| Check::new("hopf", label, n, ok, detail);
    for n in 0..=max_grade {
        // Associativity on basis triples.
        let mut bad = None;
        'assoc: for g in grade_compositions(n, 3) {
            for a in all_perms(g[0]) {
                for b in all_perms(g[1]) {
                    let ab = hopf_product(&a, &b);
                    for c in all_perms(g[2]) {
                        let left = alg_product(&ab, &AlgElem::from_perm(&c));
                        let right = alg_product(&AlgElem::from_perm(&a), &hopf_product(&b, &c));
                        if left != right {
                            bad = Some(format!("({a}) ({b}) ({c})"));
                            break 'assoc;
                        }
                    }
                }
            }
        }
        out.push(ck("associativity", n, bad.is_none(), bad.unwrap_or_default()));

        let ws = all_perms(n);
        // Coassociativity and counit.
        let mut bad = None;
        for w in &ws {
            let d = hopf_coproduct(w);
            let mut left: BTreeMap<(SignedPerm, SignedPerm, SignedPerm), Rat> = BTreeMap::new();
            let mut right = left.clone();
            for ((u, v), c) in &d.terms {
                for ((a, b), e) in &hopf_coproduct(u).terms {
                    *left.entry((a.clone(), b.clone(), v.clone())).or_insert_with(Rat::zero) += c * e;
                }
                for ((a, b), e) in &hopf_coproduct(v).terms {
                    *right.entry((u.clone(), a.clone(), b.clone())).or_insert_with(Rat::zero) += c * e;
                }
            }
            let counit_ok = d.coeff(&SignedPerm::empty(), w).is_one() && d.coeff(w, &SignedPerm::empty()).is_one();
            if left != right || !counit_ok {
                bad = Some(w.to_string());
                break;
            }
        }
        out.push(ck("coassociativity and counit", n, bad.is_none(), bad.unwrap_or_default()));

        // Unit.
        let unit_ok = ws.iter().all(|w| {
            hopf_product(&SignedPerm::empty(), w) == AlgElem::from_perm(w)
                && hopf_product(w, &SignedPerm::empty()) == AlgElem::from_perm(w)
        });
        out.push(ck("unit", n, unit_ok, String::new()));

        // Compatibility Δ(u * v) = Δ(u) Δ(v), and self-duality.
        let mut bad_compat = None;
        let mut bad_dual = None;
        let coproducts: BTreeMap<&SignedPerm, TensorElem> = ws.iter().map(|w| (w, hopf_coproduct(w))).collect();
        for i in 0..=n {
            for u in all_perms(i) {
                for v in all_perms(n - i) {
                    let uv = hopf_product(&u, &v);
                    if bad_compat.is_none() {
                        let lhs = alg_coproduct(&uv);
                        let rhs = hopf_coproduct(&u).product(&hopf_coproduct(&v));
                        if lhs != rhs {
                            bad_compat = Some(format!("({u}) ({v})"));
                        }
                    }
                    if bad_dual.is_none() {
                        let (ui, vi) = (u.inverse(), v.inverse());
                        for w in &ws {
                            if coproducts[w].coeff(&ui, &vi) != uv.coeff(&w.inverse()) {
                                bad_dual = Some(format!("({u}) ({v}) ({w})"));
                                break;
                            }
                        }
                    }
                }
            }
        }
        out.push(ck("compatibility of product and coproduct", n, bad_compat.is_none(), bad_compat.unwrap_or_default()));
        out.push(ck("self-duality", n, bad_dual.is_none(), bad_dual.unwrap_or_default()));

        if n == 0 {
            continue;
        }
        let comps = SComp::all(n);
        // Σ' closed under Δ, θ commutes with Res.
        let mut bad_closure = None;
        let mut bad_theta = None;
        for c in &comps {
            let x = algebra::x_element(c)?;
            let d = alg_coproduct(&x);
            if !tensor_in(&d, n, in_sigma)? {
                bad_closure = Some(c.to_string());
                continue;
            }
            let lhs = theta_tensor(&d, n, false)?;
            if lhs != char_coproduct(&characters::induced_trivial(c)?) {
                bad_theta = Some(c.to_string());
            }
        }
        out.push(ck("Σ' closed under coproduct", n, bad_closure.is_none(), bad_closure.unwrap_or_default()));
        out.push(ck("θ commutes with coproduct", n, bad_theta.is_none(), bad_theta.unwrap_or_default()));

        // Σ' closed under product: x_C * x_D = x_{C⊔D}; θ commutes with product.
        let mut bad_prod = None;
        let mut bad_theta_prod = None;
        for i in 1..n {
            for c in SComp::all(i) {
                for d in SComp::all(n - i) {
                    let p = alg_product(&algebra::x_element(&c)?, &algebra::x_element(&d)?);
                    let cd = c.concat(&d);
                    if p != algebra::x_element(&cd)? {
                        bad_prod = Some(format!("{c} | {d}"));
                    }
                    let lhs = characters::induced_trivial(&cd)?;
                    let rhs = char_product(&characters::induced_trivial(&c)?, &characters::induced_trivial(&d)?)?;
                    if lhs != rhs {
                        bad_theta_prod = Some(format!("{c} | {d}"));
                    }
                }
            }
        }
        out.push(ck("x_C * x_D = x_(C⊔D)", n, bad_prod.is_none(), bad_prod.unwrap_or_default()));
        out.push(ck("θ commutes with product", n, bad_theta_prod.is_none(), bad_theta_prod.unwrap_or_default()));

        // Q closed under * and Δ; θ̃ commutes with both.
        let cd = rsk::coplactic_data(n)?;
        let zs: Vec<AlgElem> = cd.tabs.iter().map(|q| CoplacticElem::z(q).to_alg()).collect::<Result<_>>()?;
        let mut bad_q = None;
        let mut bad_tilde = None;
        for (q, z) in cd.tabs.iter().zip(&zs) {
            let d = alg_coproduct(z);
            if !tensor_in(&d, n, in_q)? {
                bad_q = Some(q.to_string());
                continue;
            }
            if theta_tensor(&d, n, true)? != char_coproduct(&rsk::theta_tilde(&CoplacticElem::z(q))?) {
                bad_tilde = Some(q.to_string());
            }
        }
        for i in 1..n {
            let (cl, cr) = (rsk::coplactic_data(i)?, rsk::coplactic_data(n - i)?);
            for q1 in &cl.tabs {
                for q2 in &cr.tabs {
                    let z1 = CoplacticElem::z(q1);
                    let z2 = CoplacticElem::z(q2);
                    let p = alg_product(&z1.to_alg()?, &z2.to_alg()?);
                    match CoplacticElem::from_alg(&p)? {
                        None => bad_q = Some(format!("{q1} * {q2}")),
                        Some(pz) => {
                            let rhs = char_product(&rsk::theta_tilde(&z1)?, &rsk::theta_tilde(&z2)?)?;
                            if rsk::theta_tilde(&pz)? != rhs {
                                bad_tilde = Some(format!("{q1} * {q2}"));
                            }
                        }
                    }
                }
            }
        }
        out.push(ck("Q closed under product and coproduct", n, bad_q.is_none(), bad_q.unwrap_or_default()));
        out.push(ck("θ̃ commutes with product and coproduct", n, bad_tilde.is_none(), bad_tilde.unwrap_or_default()));

        // Frobenius reciprocity on irreducible triples.
        let mut bad_frob = None;
        if n <= 3 {
            for k in 0..=n {
                for a in Bip::all(k) {
                    for b in Bip::all(n - k) {
                        let f = irreducible_any(&a)?;
                        let g = irreducible_any(&b)?;
                        let fg = char_product(&f, &g)?;
                        for z in Bip::all(n) {
                            let zeta = characters::irreducible(&z)?;
                            if tensor_inner(&f, &g, &zeta)? != characters::inner(&fg, &zeta)? {
                                bad_frob = Some(format!("{a} {b} {z}"));
                            }
                        }
                    }
                }
            }
        }
        out.push(ck("Frobenius reciprocity", n, bad_frob.is_none(), bad_frob.unwrap_or_default()));

        // Free generation shadow: the products x_{c_1} * ⋯ * x_{c_r} are independent.
        let mut span = crate::linalg::Span::new();
        for c in &comps {
            let mut acc = AlgElem::from_perm(&SignedPerm::empty());
            for &p in c.parts() {
                acc = alg_product(&acc, &algebra::x_element(&SComp::new(vec![p])?)?);
            }
            span.insert(&acc.to_dense()?);
        }
        out.push(ck(
            "products of x_(c) are linearly independent",
            n,
            span.dim() == comps.len(),
            format!("rank {} of {}", span.dim(), comps.len()),
        ));
    }
    Ok(out)
}

/// `ξ_λ`, including the unit character of `W_0`.
pub fn irreducible_any(l: &Bip) -> Result<ClassFn> {
    if l.size() == 0 {
        Ok(ClassFn::trivial(0))
    } else {
        characters::irreducible(l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    #[test]
    fn standardization() {
        assert_eq!(standardize(&[-1, 2, 4, -3]).unwrap(), p("-1 2 4 -3"));
        assert_eq!(standardize(&[5, -2, 7]).unwrap(), p("2 -1 3"));
        assert_eq!(standardize(&[]).unwrap(), SignedPerm::empty());
        assert!(standardize(&[1, 0]).is_err());
    }

    #[test]
    fn product_example() {
        let got = hopf_product(&p("-1 2"), &p("2 -1"));
        let want = ["-1 2 4 -3", "-1 3 4 -2", "-1 4 3 -2", "-2 3 4 -1", "-2 4 3 -1", "-3 4 2 -1"];
        let want = AlgElem::indicator(4, &want.iter().map(|s| p(s)).collect::<Vec<_>>()).unwrap();
        assert_eq!(got, want);
        for (w, _) in got.terms() {
            let win = w.window();
            assert_eq!(standardize(&win[..2]).unwrap(), p("-1 2"));
            assert_eq!(standardize(&win[2..]).unwrap(), p("2 -1"));
        }
        for u in SignedPerm::all(2) {
            for v in SignedPerm::all(2) {
                assert_eq!(hopf_product(&u, &v), hopf_product_literal(&u, &v).unwrap());
            }
        }
    }

    #[test]
    fn coproduct_example() {
        let d = hopf_coproduct(&p("-2 3 1 -4"));
        let mut want = TensorElem::zero();
        for (a, b) in [("", "-2 3 1 -4"), ("1", "-1 2 -3"), ("-2 1", "1 -2"), ("-2 3 1", "-1"), ("-2 3 1 -4", "")] {
            want.add_term(p(a), p(b), Rat::one());
        }
        assert_eq!(d, want);
        for w in SignedPerm::all(3) {
            assert_eq!(hopf_coproduct(&w), hopf_coproduct_by_cosets(&w).unwrap());
        }
        let e = hopf_coproduct(&SignedPerm::empty());
        assert_eq!(e.terms.len(), 1);
    }

    #[test]
    fn coproduct_of_x_n() {
        for n in 1..=4 {
            for sign in [1, -1] {
                let x = algebra::x_element(&SComp::new(vec![sign * n as i32]).unwrap()).unwrap();
                let mut want = TensorElem::zero();
                for i in 0..=n {
                    let part = |k: usize| -> AlgElem {
                        if k == 0 {
                            AlgElem::from_perm(&SignedPerm::empty())
                        } else {
                            algebra::x_element(&SComp::new(vec![sign * k as i32]).unwrap()).unwrap()
                        }
                    };
                    for (u, a) in part(i).terms() {
                        for (v, b) in part(n - i).terms() {
                            want.add_term(u.clone(), v.clone(), a * b);
                        }
                    }
                }
                assert_eq!(alg_coproduct(&x), want);
            }
        }
    }

    #[test]
    fn bialgebra_up_to_grade_three() {
        for c in verify_bialgebra(3).unwrap() {
            assert!(c.passed, "{} at {}: {}", c.label, c.n, c.detail);
        }
    }
}
