//! Labelled verification checks grouped into suites.
//!
//! Every suite takes a size `n` and runs each of its checks for the sizes
//! `1..=min(n, cap)`, where `cap` is the check's own default envelope. With
//! `force` the caps are lifted to `n`. A suite refuses sizes above its
//! largest cap unless forced.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{self, AlgElem, SigmaExpr};
use crate::characters::{self, ClassFn};
use crate::comp::{Bip, Partition, SComp};
use crate::cosets;
use crate::error::{Error, Result};
use crate::group;
use crate::hopf::{self, TensorElem};
use crate::linalg::{self, Span};
use crate::perm::{GenElem, SignedPerm};
use crate::rsk::{self, Bitab, CoplacticElem};
use crate::symfun::{self, Basis, CharTag, SymFun};
use crate::tables;
use crate::{rat, Rat};

/// Outcome of one labelled check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: String,
    pub label: String,
    pub n: usize,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(suite: &str, label: &str, n: usize, passed: bool, detail: impl Into<String>) -> Self {
        Check { suite: suite.into(), label: label.into(), n, passed, detail: detail.into() }
    }
}

/// Names accepted by [`run_suite`].
pub const SUITES: [&str; 8] = ["core", "cosets", "algebra", "characters", "rsk", "hopf", "symfun", "all"];

/// Largest `n` a suite accepts without `force`.
pub fn suite_envelope(suite: &str) -> Result<usize> {
    Ok(match suite {
        "core" | "cosets" | "rsk" | "symfun" | "all" => 5,
        "algebra" | "characters" | "hopf" => 4,
        _ => return Err(Error::Parse(format!("unknown suite `{suite}`"))),
    })
}

/// Runs a suite (or all of them) at size `n`.
pub fn run_suite(suite: &str, n: usize, force: bool) -> Result<Vec<Check>> {
    let max = suite_envelope(suite)?;
    if n > max && !force {
        return Err(Error::Envelope { what: "verification suite", n, max });
    }
    if suite == "all" {
        let mut out = Vec::new();
        for s in &SUITES[..SUITES.len() - 1] {
            let m = if force { n } else { n.min(suite_envelope(s)?) };
            out.extend(run_suite(s, m, force)?);
        }
        return Ok(out);
    }
    let mut r = Runner { suite: static_name(suite), n, force, out: Vec::new() };
    match suite {
        "core" => core_suite(&mut r)?,
        "cosets" => cosets_suite(&mut r)?,
        "algebra" => algebra_suite(&mut r)?,
        "characters" => characters_suite(&mut r)?,
        "rsk" => rsk_suite(&mut r)?,
        "hopf" => hopf_suite(&mut r)?,
        "symfun" => symfun_suite(&mut r)?,
        _ => unreachable!(),
    }
    Ok(r.out)
}

fn static_name(s: &str) -> &'static str {
    SUITES.iter().find(|&&x| x == s).copied().unwrap_or("unknown")
}

/// `Ok(detail)` passes, `Err(detail)` fails with a counterexample.
type Verdict = std::result::Result<String, String>;

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    if ok {
        Ok(String::new())
    } else {
        Err(detail.into())
    }
}

/// First failing item of an iterator of verdicts, or a pass.
fn all_of(items: impl IntoIterator<Item = Verdict>) -> Verdict {
    for v in items {
        v?;
    }
    Ok(String::new())
}

struct Runner {
    suite: &'static str,
    n: usize,
    force: bool,
    out: Vec<Check>,
}

impl Runner {
    fn top(&self, cap: usize) -> usize {
        if self.force {
            self.n
        } else {
            self.n.min(cap)
        }
    }

    /// Runs `f` for every size from `lo` to the capped top.
    fn sizes(&mut self, label: &str, lo: usize, cap: usize, mut f: impl FnMut(usize) -> Result<Verdict>) -> Result<()> {
        for m in lo..=self.top(cap) {
            self.record(label, m, f(m)?);
        }
        Ok(())
    }

    fn record(&mut self, label: &str, m: usize, v: Verdict) {
        let (passed, detail) = match v {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.out.push(Check::new(self.suite, label, m, passed, detail));
    }
}

fn sc(s: &str) -> SComp {
    s.parse().expect("valid composition literal")
}

// ---------------------------------------------------------------- core

/// Positive roots of type B_n as `(vector, reflection)`; a vector is
/// positive iff its coordinate of largest index is positive.
fn positive_roots(n: usize) -> Vec<(Vec<i32>, SignedPerm)> {
    let mut out = Vec::new();
    for j in 1..=n {
        let mut v = vec![0; n];
        v[j - 1] = 1;
        out.push((v, GenElem::T(j).to_perm(n).unwrap()));
        for i in 1..j {
            let mut win: Vec<i32> = (1..=n as i32).collect();
            let mut v = vec![0; n];
            v[j - 1] = 1;
            v[i - 1] = -1;
            win.swap(i - 1, j - 1);
            out.push((v.clone(), SignedPerm::new(win.clone()).unwrap()));
            v[i - 1] = 1;
            let mut win: Vec<i32> = (1..=n as i32).collect();
            win[i - 1] = -(j as i32);
            win[j - 1] = -(i as i32);
            out.push((v, SignedPerm::new(win).unwrap()));
        }
    }
    out
}

fn act_on_vector(w: &SignedPerm, v: &[i32]) -> Vec<i32> {
    let mut out = vec![0; v.len()];
    for (i, &c) in v.iter().enumerate() {
        let img = w.window()[i];
        out[img.unsigned_abs() as usize - 1] += c * img.signum();
    }
    out
}

fn is_positive(v: &[i32]) -> bool {
    v.iter().rev().find(|&&c| c != 0).is_some_and(|&c| c > 0)
}

fn core_suite(r: &mut Runner) -> Result<()> {
    r.sizes("|Comp(m)| = 2*3^(m-1)", 1, 8, |m| {
        let got = SComp::all(m).len();
        Ok(verdict(got == 2 * 3usize.pow(m as u32 - 1), format!("got {got}")))
    })?;
    // The count is cheap: always run it up to 8.
    for m in r.top(8) + 1..=8 {
        let got = SComp::all(m).len();
        r.record("|Comp(m)| = 2*3^(m-1)", m, verdict(got == 2 * 3usize.pow(m as u32 - 1), format!("got {got}")));
    }
    r.sizes("length and t-length are inverse-invariant; t-length counts negative entries", 1, 5, |m| {
        Ok(all_of(SignedPerm::all(m).into_iter().map(|w| {
            let wi = w.inverse();
            let neg = w.window().iter().filter(|&&x| x < 0).count();
            verdict(w.length() == wi.length() && w.t_length() == wi.t_length() && w.t_length() == neg, w.to_string())
        })))
    })?;
    r.sizes("l(w s_a) < l(w) iff w(a) is negative, for every positive root a", 1, 5, |m| {
        let roots = positive_roots(m);
        Ok(all_of(SignedPerm::all(m).into_iter().map(|w| {
            all_of(roots.iter().map(|(v, s)| {
                let shorter = w.compose(s).unwrap().length() < w.length();
                verdict(shorter != is_positive(&act_on_vector(&w, v)), format!("{w} at {v:?}"))
            }))
        })))
    })?;
    r.sizes("ascent criteria for s_i and t_j", 1, 5, |m| {
        Ok(all_of(SignedPerm::all(m).into_iter().map(|w| {
            all_of(GenElem::all(m).into_iter().map(|g| {
                let by_length = w.compose(&g.to_perm(m).unwrap()).unwrap().length() > w.length();
                let win = w.window();
                let rule = match g {
                    GenElem::S(i) => win[i - 1] < win[i],
                    GenElem::T(j) => win[j - 1] > 0,
                };
                verdict(by_length == rule && w.is_ascent(g) == rule, format!("{w} at {g}"))
            }))
        })))
    })?;
    r.sizes("U'(w) = A_C(w)", 1, 5, |m| {
        Ok(all_of(
            SignedPerm::all(m).into_iter().map(|w| verdict(w.ascent_set() == w.descent_composition().ascents(), w.to_string())),
        ))
    })?;
    r.sizes("C -> A_C is injective", 1, 5, |m| {
        let sets: HashSet<BTreeSet<GenElem>> = SComp::all(m).iter().map(|c| c.ascents()).collect();
        Ok(verdict(sets.len() == SComp::all(m).len(), format!("{} distinct sets", sets.len())))
    })?;
    r.sizes("C <- D iff S_C in A_D iff a unique refinement E exists", 1, 4, |m| {
        let comps = SComp::all(m);
        let mut bad = None;
        for c in &comps {
            let brs: BTreeSet<SComp> = c.b_refinements().into_iter().collect();
            for d in &comps {
                let arrow = c.left_arrow(d);
                let subset = c.generators().is_subset(&d.ascents());
                let found = c.refinement(d)?.is_some();
                let count = brs.iter().filter(|e| e.r_coarsens_to(d)).count();
                if arrow != subset || arrow != found || count != usize::from(arrow) {
                    bad = Some(format!("{c} <- {d}: {count} candidates"));
                }
            }
        }
        Ok(bad.map_or(Ok(String::new()), Err))
    })?;
    r.sizes("the transitive closure of <- is a partial order", 1, 4, |m| {
        let comps = SComp::all(m);
        let k = comps.len();
        let mut rel: Vec<Vec<bool>> = comps.iter().map(|c| comps.iter().map(|d| c.left_arrow(d)).collect()).collect();
        for via in 0..k {
            for a in 0..k {
                if rel[a][via] {
                    for b in 0..k {
                        if rel[via][b] {
                            rel[a][b] = true;
                        }
                    }
                }
            }
        }
        let mut bad = None;
        for a in 0..k {
            if !rel[a][a] {
                bad = Some(format!("not reflexive at {}", comps[a]));
            }
            for b in 0..a {
                if rel[a][b] && rel[b][a] {
                    bad = Some(format!("{} and {}", comps[a], comps[b]));
                }
            }
        }
        Ok(bad.map_or(Ok(String::new()), Err))
    })?;
    r.sizes("<X> meets S' in X iff X = S'_C", 1, 3, |m| {
        let g = group::table(m)?;
        let gens = GenElem::all(m);
        let gen_idx: Vec<usize> = gens.iter().map(|s| g.index_of(&s.to_perm(m).unwrap())).collect();
        let mut bad = None;
        for mask in 0u32..(1 << gens.len()) {
            let x: BTreeSet<GenElem> = (0..gens.len()).filter(|i| mask >> i & 1 == 1).map(|i| gens[i]).collect();
            let xi: Vec<usize> = (0..gens.len()).filter(|i| mask >> i & 1 == 1).map(|i| gen_idx[i]).collect();
            let id = g.index_of(&SignedPerm::identity(m));
            let mut seen = vec![false; g.size()];
            seen[id] = true;
            let mut queue = VecDeque::from([id]);
            while let Some(a) = queue.pop_front() {
                for &s in &xi {
                    let b = g.mul(a, s);
                    if !seen[b] {
                        seen[b] = true;
                        queue.push_back(b);
                    }
                }
            }
            let closed = gens.iter().zip(&gen_idx).all(|(s, &i)| seen[i] == x.contains(s));
            let is_sc = cosets::comp_with_reflections(m, &x).is_some();
            if closed != is_sc {
                bad = Some(format!("{x:?}"));
            }
        }
        Ok(bad.map_or(Ok(String::new()), Err))
    })?;
    r.sizes("cycle type is a complete conjugacy invariant with |Bip(m)| values", 1, 5, |m| {
        let g = group::table(m)?;
        let gens: Vec<usize> = GenElem::all(m).iter().map(|s| g.index_of(&s.to_perm(m).unwrap())).collect();
        let mut class = vec![usize::MAX; g.size()];
        let mut types = Vec::new();
        for start in 0..g.size() {
            if class[start] != usize::MAX {
                continue;
            }
            let k = types.len();
            types.push(g.elems[start].cycle_type());
            class[start] = k;
            let mut queue = VecDeque::from([start]);
            while let Some(a) = queue.pop_front() {
                for &s in &gens {
                    let b = g.mul(g.mul(s, a), s);
                    if class[b] == usize::MAX {
                        class[b] = k;
                        queue.push_back(b);
                    }
                }
            }
        }
        let constant = (0..g.size()).all(|i| g.elems[i].cycle_type() == types[class[i]]);
        let distinct: BTreeSet<&Bip> = types.iter().collect();
        Ok(verdict(
            constant && distinct.len() == types.len() && types.len() == Bip::all(m).len(),
            format!("{} classes, {} types", types.len(), distinct.len()),
        ))
    })?;
    Ok(())
}

// ---------------------------------------------------------------- cosets

fn set_of(v: &[SignedPerm]) -> BTreeSet<SignedPerm> {
    v.iter().cloned().collect()
}

/// Canonical form of `W_C` up to conjugation: the smallest sorted index list
/// of `g W_C g⁻¹` over `g ∈ W_n`.
fn conjugacy_key(c: &SComp) -> Result<Vec<usize>> {
    let g = group::table(c.n())?;
    let sub: Vec<usize> = cosets::subgroup_elements(c)?.iter().map(|w| g.index_of(w)).collect();
    let mut best: Option<Vec<usize>> = None;
    for x in 0..g.size() {
        let xi = g.index_of(&g.elems[x].inverse());
        let mut conj: Vec<usize> = sub.iter().map(|&w| g.mul(g.mul(x, w), xi)).collect();
        conj.sort_unstable();
        if best.as_ref().is_none_or(|b| conj < *b) {
            best = Some(conj);
        }
    }
    Ok(best.unwrap_or_default())
}

fn cosets_suite(r: &mut Runner) -> Result<()> {
    r.sizes("W_n is the disjoint union of the fibers Y_C", 1, 5, |m| {
        let mut seen = BTreeSet::new();
        let mut total = 0;
        for c in SComp::all(m) {
            let y = cosets::descent_fiber(&c)?;
            if y.is_empty() {
                return Ok(Err(format!("Y_({c}) is empty")));
            }
            total += y.len();
            seen.extend(y);
        }
        Ok(verdict(total == group::order(m) && seen.len() == total, format!("{total} elements")))
    })?;
    r.sizes("X_C is the disjoint union of Y_D over C <- D", 1, 4, |m| {
        let comps = SComp::all(m);
        let fibers: Vec<Vec<SignedPerm>> = comps.iter().map(cosets::descent_fiber).collect::<Result<_>>()?;
        let mut bad = None;
        for c in &comps {
            let x = set_of(&cosets::x_set(c)?);
            let mut u = BTreeSet::new();
            let mut total = 0;
            for (d, y) in comps.iter().zip(&fibers) {
                if c.left_arrow(d) {
                    if c.refinement(d)?.is_none() {
                        bad = Some(format!("{c} <- {d} without refinement"));
                    }
                    total += y.len();
                    u.extend(y.iter().cloned());
                }
            }
            if u != x || total != x.len() {
                bad = Some(c.to_string());
            }
        }
        Ok(bad.map_or(Ok(String::new()), Err))
    })?;
    r.sizes("eta_C is the unique longest element of X_C and C(eta_C) = C", 1, 4, |m| {
        Ok(all_of(SComp::all(m).into_iter().map(|c| {
            let x = cosets::x_set(&c).unwrap();
            let e = cosets::eta(&c);
            let max = x.iter().map(|w| w.length()).max().unwrap_or(0);
            let longest: Vec<&SignedPerm> = x.iter().filter(|w| w.length() == max).collect();
            verdict(longest == vec![&e] && e.descent_composition() == c, c.to_string())
        })))
    })?;
    r.sizes("X_D = union of X^C_(C cap dD) d when C is parabolic or D semi-positive", 1, 4, |m| {
        let comps = SComp::all(m);
        let mut bad = None;
        for c in comps.iter().filter(|c| c.is_parabolic()) {
            for d in &comps {
                check_easy_case(c, d, &mut bad)?;
            }
        }
        for c in &comps {
            for d in comps.iter().filter(|d| d.is_semi_positive() && !c.is_parabolic()) {
                check_easy_case(c, d, &mut bad)?;
            }
        }
        Ok(bad.map_or(Ok(String::new()), Err))
    })?;
    r.sizes("t-length does not decrease under conjugation by X_C", 1, 4, |m| {
        let mut bad = None;
        for c in SComp::all(m) {
            let sub = cosets::subgroup_elements(&c)?;
            for x in cosets::x_set(&c)? {
                let xi = x.inverse();
                for w in &sub {
                    if x.compose(w)?.compose(&xi)?.t_length() < w.t_length() {
                        bad = Some(format!("{c}: x = {x}, w = {w}"));
                    }
                }
            }
        }
        Ok(bad.map_or(Ok(String::new()), Err))
    })?;
    r.sizes("double cosets: t-length, unique factorization and length bound", 1, 3, |m| {
        let comps = SComp::all(m);
        let mut bad = None;
        for c in &comps {
            let wc = cosets::subgroup_elements(c)?;
            for d in &comps {
                let wd = cosets::subgroup_elements(d)?;
                for dd in cosets::double_coset_reps(c, d)? {
                    let e = cosets::intersect_comp(c, &dd, d)?;
                    let ddi = dd.inverse();
                    for w in cosets::subgroup_elements(&e)? {
                        if w.t_length() != ddi.compose(&w)?.compose(&dd)?.t_length() {
                            bad = Some(format!("(c) {c} {d} {dd} {w}"));
                        }
                    }
                    let mut coset = BTreeSet::new();
                    for a in &wc {
                        for b in &wd {
                            coset.insert(a.compose(&dd)?.compose(b)?);
                        }
                    }
                    let xs = cosets::min_coset_reps(&e, c)?.reps;
                    let mut products = BTreeSet::new();
                    let mut count = 0;
                    for x in &xs {
                        for y in &wd {
                            let p = x.compose(&dd)?.compose(y)?;
                            let bound = x.s_part().length() + x.t_length() + dd.length() + y.s_part().length() + y.t_length();
                            if p.length() < bound {
                                bad = Some(format!("(e) {c} {d} {dd} {x} {y}"));
                            }
                            products.insert(p);
                            count += 1;
                        }
                    }
                    if products != coset || count != coset.len() {
                        bad = Some(format!("(d) {c} {d} {dd}"));
                    }
                }
            }
        }
        Ok(bad.map_or(Ok(String::new()), Err))
    })?;
    r.sizes("x S'_C x^-1 in S' gives S'_D with X_C = X_D x", 1, 3, |m| {
        let mut bad = None;
        for c in SComp::all(m) {
            let xc = set_of(&cosets::x_set(&c)?);
            for x in &xc {
                let xi = x.inverse();
                let conj: Option<BTreeSet<GenElem>> = c
                    .reflections()
                    .into_iter()
                    .map(|s| cosets::as_reflection(&x.compose(&s.to_perm(m).unwrap()).unwrap().compose(&xi).unwrap()))
                    .collect();
                let Some(conj) = conj else { continue };
                match cosets::comp_with_reflections(m, &conj) {
                    None => bad = Some(format!("{c} {x}: not of the form S'_D")),
                    Some(d) => {
                        let shifted: BTreeSet<SignedPerm> =
                            cosets::x_set(&d)?.iter().map(|y| y.compose(x).unwrap()).collect();
                        if shifted != xc {
                            bad = Some(format!("{c} {x} -> {d}"));
                        }
                    }
                }
            }
        }
        Ok(bad.map_or(Ok(String::new()), Err))
    })?;
    r.sizes("W_C and W_D are conjugate iff lambda(C) = lambda(D)", 1, 4, |m| {
        let comps = SComp::all(m);
        let keys: Vec<Vec<usize>> = comps.iter().map(conjugacy_key).collect::<Result<_>>()?;
        let mut bad = None;
        for (i, c) in comps.iter().enumerate() {
            for (j, d) in comps.iter().enumerate() {
                if (keys[i] == keys[j]) != (c.bip() == d.bip()) {
                    bad = Some(format!("{c} {d}"));
                }
            }
        }
        Ok(bad.map_or(Ok(String::new()), Err))
    })?;
    r.sizes("X_(-n) decomposes along sigma_(k,l,m)", 1, 5, |m| {
        let xn = set_of(&cosets::x_set(&SComp::new(vec![-(m as i32)])?)?);
        let mut bad = None;
        for k in 0..=m {
            let l = m - k;
            let ambient = SComp::from_parts_dropping_zeros([k as i32, l as i32])?;
            let mut union = BTreeSet::new();
            let mut total = 0;
            for j in 0..=l {
                let mid = SComp::from_parts_dropping_zeros([-(k as i32), j as i32, (l - j) as i32])?;
                let low = SComp::from_parts_dropping_zeros([-(k as i32), -(j as i32), (l - j) as i32])?;
                let sigma_inv = cosets::sigma_klm(k, l, j).inverse();
                let xs = cosets::min_coset_reps(&mid, &ambient)?.reps;
                let ys = cosets::relative_descent_fiber(&low, &mid)?;
                for x in &xs {
                    for y in &ys {
                        union.insert(x.compose(y)?.compose(&sigma_inv)?);
                        total += 1;
                    }
                }
            }
            if union != xn || total != xn.len() {
                bad = Some(format!("k = {k}, l = {l}: {total} products, {} distinct", union.len()));
            }
        }
        Ok(bad.map_or(Ok(String::new()), Err))
    })?;
    Ok(())
}

fn check_easy_case(c: &SComp, d: &SComp, bad: &mut Option<String>) -> Result<()> {
    let xd = set_of(&cosets::x_set(d)?);
    let mut union = BTreeSet::new();
    let mut total = 0;
    for dd in cosets::double_coset_reps(c, d)? {
        let e = cosets::intersect_comp(c, &dd, d)?;
        for x in cosets::min_coset_reps(&e, c)?.reps {
            union.insert(x.compose(&dd)?);
            total += 1;
        }
    }
    if union != xd || total != xd.len() {
        *bad = Some(format!("C = {c}, D = {d}"));
    }
    Ok(())
}

// ---------------------------------------------------------------- algebra

fn algebra_suite(r: &mut Runner) -> Result<()> {
    r.sizes("Sigma' is closed under multiplication", 1, 4, |m| {
        let sb = algebra::sigma_basis(m)?;
        let g = group::table(m)?;
        let k = sb.comps.len();
        for c in 0..k {
            for d in 0..k {
                let mut acc = vec![0i64; g.size()];
                for &i in &sb.x_support[c] {
                    for &j in &sb.x_support[d] {
                        acc[g.mul(i, j)] += 1;
                    }
                }
                let dense: Vec<Rat> = acc.into_iter().map(rat).collect();
                if sb.dense_to_x(&dense).is_none() {
                    return Ok(Err(format!("x_({}) x_({})", sb.comps[c], sb.comps[d])));
                }
            }
        }
        Ok(Ok(format!("{} products", k * k)))
    })?;
    r.sizes("theta(x_C x_D) = theta(x_C) theta(x_D)", 1, 4, theta_is_multiplicative)?;
    r.sizes("Ker theta has rank |Comp| - |Bip| with the difference basis", 1, 4, |m| {
        let kb = algebra::kernel_basis(m)?;
        let mut span = Span::new();
        for k in &kb {
            if !characters::theta(k)?.is_zero() {
                return Ok(Err(format!("theta({k}) != 0")));
            }
            span.insert(&k.to_vec());
        }
        let mut image = Span::new();
        for c in SComp::all(m) {
            image.insert(&characters::induced_trivial(&c)?.to_vec());
        }
        let expected = SComp::all(m).len() - Bip::all(m).len();
        Ok(verdict(
            span.dim() == expected && kb.len() == expected && image.dim() == Bip::all(m).len(),
            format!("kernel rank {}, image rank {}", span.dim(), image.dim()),
        ))
    })?;
    r.sizes("the ideal generated by Ker theta is nilpotent", 1, 3, |m| {
        let k = algebra::kernel_nilpotency_index(m)?;
        Ok(verdict(k.is_some(), "no vanishing power").map(|_| format!("index {}", k.unwrap_or(0))))
    })?;
    r.sizes("x_C and y_C are bases and x_C = sum of y_D over C <- D", 1, 4, |m| {
        let comps = SComp::all(m);
        let mut xs = Span::new();
        let mut ys = Span::new();
        for c in &comps {
            let x = algebra::x_element(c)?;
            xs.insert(&x.to_dense()?);
            ys.insert(&algebra::y_element(c)?.to_dense()?);
            let mut sum = AlgElem::zero(m);
            for d in comps.iter().filter(|d| c.left_arrow(d)) {
                sum = sum.add(&algebra::y_element(d)?)?;
            }
            if sum != x {
                return Ok(Err(c.to_string()));
            }
        }
        Ok(verdict(xs.dim() == comps.len() && ys.dim() == comps.len(), format!("ranks {} {}", xs.dim(), ys.dim())))
    })?;
    r.sizes("Ker theta = {x : tau(xy) = 0 for all y in Sigma'}", 1, 3, |m| {
        let gram = algebra::gram_matrix(m)?;
        let null = linalg::nullspace(&gram);
        let mut kernel = Span::new();
        for k in algebra::kernel_basis(m)? {
            kernel.insert(&k.to_vec());
        }
        let inside = null.iter().all(|v| kernel.contains(v));
        Ok(verdict(inside && null.len() == kernel.dim(), format!("radical dim {}, kernel dim {}", null.len(), kernel.dim())))
    })?;
    r.sizes("dim Sigma'(W_D) is the product over the blocks of D", 1, 4, |m| {
        let comps = SComp::all(m);
        let mut bad = None;
        for d in &comps {
            let mut span = Span::new();
            for c in comps.iter().filter(|c| c.is_subcomp_of(d)) {
                span.insert(&algebra::x_element_in(c, d)?.to_dense()?);
            }
            let expected: usize = d
                .parts()
                .iter()
                .map(|&p| {
                    let k = p.unsigned_abs();
                    if p > 0 {
                        2 * 3usize.pow(k - 1)
                    } else {
                        1 << (k - 1)
                    }
                })
                .product();
            if span.dim() != expected {
                bad = Some(format!("{d}: {} vs {expected}", span.dim()));
            }
        }
        Ok(bad.map_or(Ok(String::new()), Err))
    })?;
    Ok(())
}

fn theta_is_multiplicative(m: usize) -> Result<Verdict> {
    let sb = algebra::sigma_basis(m)?;
    let k = sb.structure_constants();
    let thetas: Vec<ClassFn> = sb.comps.iter().map(characters::induced_trivial).collect::<Result<_>>()?;
    for (c, tc) in thetas.iter().enumerate() {
        for (d, td) in thetas.iter().enumerate() {
            let mut lhs = ClassFn::zero(m);
            for (e, v) in k[c][d].iter().enumerate() {
                if !v.is_zero() {
                    lhs = lhs.add(&thetas[e].scale(v))?;
                }
            }
            if lhs != tc.mul(td)? {
                return Ok(Err(format!("{} {}", sb.comps[c], sb.comps[d])));
            }
        }
    }
    Ok(Ok(String::new()))
}

// ---------------------------------------------------------------- characters

fn characters_suite(r: &mut Runner) -> Result<()> {
    r.sizes("theta is a surjective algebra morphism", 1, 3, |m| {
        if let Err(d) = theta_is_multiplicative(m)? {
            return Ok(Err(d));
        }
        let mut image = Span::new();
        for c in SComp::all(m) {
            image.insert(&characters::induced_trivial(&c)?.to_vec());
        }
        for l in Bip::all(m) {
            if !image.contains(&characters::irreducible(&l)?.to_vec()) {
                return Ok(Err(format!("xi_{l} not in the image")));
            }
        }
        Ok(Ok(String::new()))
    })?;
    r.sizes("degree of theta(x) equals its augmentation", 1, 4, |m| {
        for c in SComp::all(m) {
            let x = algebra::x_element(&c)?;
            let dec = characters::decompose(&characters::induced_trivial(&c)?)?;
            let mut deg = Rat::zero();
            for (l, k) in &dec {
                deg += k * characters::irreducible(l)?.degree();
            }
            if deg != x.augmentation() {
                return Ok(Err(c.to_string()));
            }
        }
        Ok(Ok(String::new()))
    })?;
    r.sizes("xi_(l,0) is inflated from the symmetric group", 1, 4, |m| {
        let cd = characters::class_data(m)?;
        let g = group::table(m)?;
        for mu in Partition::all(m) {
            let xi = characters::irreducible(&Bip::new(mu.clone(), Partition::empty()))?;
            for (i, b) in cd.bips.iter().enumerate() {
                let ty = characters::unsigned_cycle_type(&g.elems[cd.rep[i]]);
                if xi.value(b) != rat(characters::symmetric_group_character(&mu, &ty)?) {
                    return Ok(Err(format!("{mu} at {b}")));
                }
            }
        }
        Ok(Ok(String::new()))
    })?;
    r.sizes("irreducible characters are orthonormal with positive degree", 1, 4, |m| {
        let xs: Vec<(Bip, ClassFn)> =
            Bip::all(m).into_iter().map(|l| characters::irreducible(&l).map(|x| (l, x))).collect::<Result<_>>()?;
        for (l, a) in &xs {
            if a.degree() <= Rat::zero() {
                return Ok(Err(format!("deg xi_{l}")));
            }
            for (mu, b) in &xs {
                let want = if l == mu { Rat::one() } else { Rat::zero() };
                if characters::inner(a, b)? != want {
                    return Ok(Err(format!("<xi_{l}, xi_{mu}>")));
                }
            }
        }
        Ok(Ok(String::new()))
    })?;
    r.sizes("xi of the dual bipartition is the sign twist", 1, 4, |m| {
        let eps = ClassFn::sign(m);
        Ok(all_of(Bip::all(m).into_iter().map(|l| {
            let ok = characters::irreducible(&l.dual()).unwrap() == eps.mul(&characters::irreducible(&l).unwrap()).unwrap();
            verdict(ok, l.to_string())
        })))
    })?;
    r.sizes("tau(x_C x_D) = <theta(x_C), theta(x_D)>", 1, 3, |m| {
        let gram = algebra::gram_matrix(m)?;
        let comps = SComp::all(m);
        let th: Vec<ClassFn> = comps.iter().map(characters::induced_trivial).collect::<Result<_>>()?;
        for i in 0..comps.len() {
            for j in 0..comps.len() {
                if gram[i][j] != characters::inner(&th[i], &th[j])? {
                    return Ok(Err(format!("{} {}", comps[i], comps[j])));
                }
            }
        }
        Ok(Ok(String::new()))
    })?;
    r.sizes("the character table of Sigma' is triangular", 1, 4, |m| {
        let t = characters::sigma_character_table(m)?;
        let bips = Bip::all(m);
        for (i, l) in bips.iter().enumerate() {
            if t[i][i].is_zero() {
                return Ok(Err(format!("zero diagonal at {l}")));
            }
            for (j, mu) in bips.iter().enumerate() {
                let contained = characters::bip_contained(l, mu)?;
                if !t[i][j].is_zero() != contained {
                    return Ok(Err(format!("{l} {mu}")));
                }
                if i != j && contained && characters::bip_contained(mu, l)? {
                    return Ok(Err(format!("{l} and {mu} contain each other")));
                }
                if mu.hat().n() == m && mu.hat().parts() == [m as i32] && !t[i][j].is_one() {
                    return Ok(Err(format!("trivial column at {l}")));
                }
            }
        }
        Ok(Ok(String::new()))
    })?;
    r.sizes("sum of squared degrees of symmetric group characters is m!", 1, 6, |m| {
        let id = Partition::from_unsorted(vec![1; m]);
        let mut total = 0i64;
        for mu in Partition::all(m) {
            total += characters::symmetric_group_character(&mu, &id)?.pow(2);
        }
        let trivial_ok = Partition::all(m).iter().all(|rho| characters::symmetric_group_character(&Partition::from_unsorted(vec![m]), rho).unwrap() == 1);
        Ok(verdict(total == (1..=m as i64).product::<i64>() && trivial_ok, format!("sum {total}")))
    })?;
    // Always-on checks for W_2, calibrated against the printed tables.
    let t = tables::all_tables()?;
    let golden5: Vec<Vec<&str>> = vec![
        vec!["1", ".", ".", ".", "."],
        vec!["1", "2", ".", ".", "."],
        vec!["1", "2", "2", ".", "."],
        vec!["1", ".", ".", "2", "."],
        vec!["1", "2", "4", "4", "8"],
    ];
    let got5: Vec<Vec<&str>> = t[4].rows.iter().map(|r| r[1..].iter().map(|s| s.as_str()).collect()).collect();
    r.record("character table of Sigma'(W_2)", 2, verdict(got5 == golden5, format!("{got5:?}")));
    r.record(
        "class sizes of W_2 are 2,1,2,2,1",
        2,
        verdict(characters::class_data(2)?.class_size == vec![2, 1, 2, 2, 1], ""),
    );
    let a = characters::theta(&SigmaExpr::basis(&sc("-2")))?.eval(&algebra::x_element(&sc("1,1"))?)?;
    let b = characters::theta(&SigmaExpr::basis(&sc("1,1")))?.eval(&algebra::x_element(&sc("-2"))?)?;
    r.record("theta(x_-2)(x_11) = 6 and theta(x_11)(x_-2) = 4", 2, verdict(a == rat(6) && b == rat(4), format!("{a}, {b}")));
    r.record(
        "idempotents of W_2 are orthogonal, sum to 1 and map to indicators",
        2,
        verdict(t[5].notes.iter().all(|n| n.ends_with(": ok")), t[5].notes.join("; ")),
    );
    let cartan = characters::cartan_matrix(&characters::w2_idempotents())?;
    let mut want = vec![vec![0usize; 5]; 5];
    for (i, row) in want.iter_mut().enumerate() {
        row[i] = 1;
    }
    want[2][3] = 1;
    r.record("Cartan matrix of Sigma'(W_2)", 2, verdict(cartan == want, format!("{cartan:?}")));
    for (label, ok) in characters::w2_algebra_decomposition()? {
        r.record(&label, 2, verdict(ok, ""));
    }
    Ok(())
}

// ---------------------------------------------------------------- rsk

fn gens_set(names: &[&str]) -> BTreeSet<GenElem> {
    names.iter().map(|s| s.parse().unwrap()).collect()
}

/// Key of `w ∈ W_k × W_l` for the coplactic relation of the product.
fn product_key(w: &SignedPerm, k: usize) -> (Bitab, Bitab) {
    let (u, v) = characters::split_cross(w, k);
    (rsk::recording(&u), rsk::recording(&v))
}

fn rsk_suite(r: &mut Runner) -> Result<()> {
    r.sizes("RSK is a bijection onto same-shape pairs", 1, 5, |m| {
        let mut seen = HashSet::new();
        for w in SignedPerm::all(m) {
            let (p, q) = rsk::rsk(&w);
            if p.shape() != q.shape() || rsk::rsk_inverse(&p, &q)? != w {
                return Ok(Err(w.to_string()));
            }
            seen.insert((p, q));
        }
        let sbt = rsk::sbt(m);
        let mut by_shape: HashMap<Bip, usize> = HashMap::new();
        for q in &sbt {
            *by_shape.entry(q.shape()).or_default() += 1;
        }
        let pairs: usize = by_shape.values().map(|c| c * c).sum();
        Ok(verdict(seen.len() == group::order(m) && pairs == group::order(m), format!("{} pairs", seen.len())))
    })?;
    r.sizes("rsk(w^-1) = (Q, P)", 1, 5, |m| {
        Ok(all_of(SignedPerm::all(m).into_iter().map(|w| {
            let (p, q) = rsk::rsk(&w);
            verdict(rsk::rsk(&w.inverse()) == (q, p), w.to_string())
        })))
    })?;
    r.sizes("closures of both coplactic edge rules are the Q-fibers", 1, 4, |m| {
        let mut fibers = rsk::coplactic_data(m)?.members.clone();
        fibers.sort();
        let a = rsk::coplactic_closure(m, rsk::coplactic_edge)? == fibers;
        let b = rsk::coplactic_closure(m, rsk::coplactic_edge_combinatorial)? == fibers;
        Ok(verdict(a && b, format!("definition {a}, combinatorial {b}")))
    })?;
    r.sizes("U' is constant on coplactic classes", 1, 4, |m| {
        let cd = rsk::coplactic_data(m)?;
        Ok(all_of(cd.tabs.iter().zip(&cd.members).map(|(q, ms)| {
            let a = ms[0].ascent_set();
            verdict(ms.iter().all(|w| w.ascent_set() == a), q.to_string())
        })))
    })?;
    r.sizes("|Z_Q cap Z_Q'^-1| = [sh Q = sh Q']", 1, 4, |m| {
        let cd = rsk::coplactic_data(m)?;
        let mut count: HashMap<(usize, usize), usize> = HashMap::new();
        let g = group::table(m)?;
        for (i, w) in g.elems.iter().enumerate() {
            let j = cd.class_of[g.index_of(&w.inverse())];
            *count.entry((cd.class_of[i], j)).or_default() += 1;
        }
        for (a, qa) in cd.tabs.iter().enumerate() {
            for (b, qb) in cd.tabs.iter().enumerate() {
                let want = usize::from(qa.shape() == qb.shape());
                if count.get(&(a, b)).copied().unwrap_or(0) != want {
                    return Ok(Err(format!("{qa} / {qb}")));
                }
            }
        }
        Ok(Ok(String::new()))
    })?;
    r.sizes("X_C is the union of Z_Q over C <- C(Q)", 1, 4, |m| {
        Ok(all_of(SComp::all(m).into_iter().map(|c| {
            let ok = rsk::x_in_z_basis(&c).unwrap().to_alg().unwrap() == algebra::x_element(&c).unwrap();
            verdict(ok, c.to_string())
        })))
    })?;
    r.sizes("coplactic classes and induction from W_k x W_l", 2, 4, |m| {
        let mut bad = None;
        for k in 1..m {
            let c = SComp::new(vec![k as i32, (m - k) as i32])?;
            let sub = cosets::subgroup_elements(&c)?;
            let xs = cosets::x_set(&c)?;
            let wc = sub.iter().max_by_key(|w| w.length()).cloned().unwrap();
            // (a) and shuffle stability
            let mut by_key: BTreeMap<(Bitab, Bitab), Vec<&SignedPerm>> = BTreeMap::new();
            for w in &sub {
                by_key.entry(product_key(w, k)).or_default().push(w);
            }
            for x in &xs {
                let xi = x.inverse();
                for ws in by_key.values() {
                    let recs: BTreeSet<Bitab> = ws.iter().map(|w| rsk::recording(&w.compose(&xi).unwrap())).collect();
                    if recs.len() != 1 {
                        bad = Some(format!("(a) x = {x}"));
                    }
                }
            }
            let cd = rsk::coplactic_data(m)?;
            for (key, ws) in &by_key {
                let mut set = BTreeSet::new();
                for x in &xs {
                    for w in ws {
                        set.insert(x.compose(w)?);
                    }
                }
                let tabs: BTreeSet<Bitab> = set.iter().map(rsk::recording).collect();
                let size: usize = tabs.iter().map(|q| cd.members[cd.index[q]].len()).sum();
                if size != set.len() {
                    bad = Some(format!("X_C Z_Q not a union of classes at {} / {}", key.0, key.1));
                }
            }
            // (b)
            let mut seen: HashMap<Bitab, (Bitab, Bitab)> = HashMap::new();
            for x in &xs {
                for w in &sub {
                    let q = rsk::recording(&x.compose(w)?);
                    let key = product_key(w, k);
                    if seen.entry(q).or_insert_with(|| key.clone()) != &key {
                        bad = Some(format!("(b) {x} {w}"));
                    }
                }
            }
            // (c)
            for ws in by_key.values() {
                let left: BTreeSet<_> = ws.iter().map(|w| product_key(&wc.compose(w).unwrap(), k)).collect();
                let right: BTreeSet<_> = ws.iter().map(|w| product_key(&w.compose(&wc).unwrap(), k)).collect();
                if left.len() != 1 || right.len() != 1 {
                    bad = Some("(c)".into());
                }
            }
        }
        Ok(bad.map_or(Ok(String::new()), Err))
    })?;
    r.sizes("theta~(z_Q) = xi_(sh Q)", 1, 4, |m| {
        let cd = rsk::coplactic_data(m)?;
        Ok(all_of(cd.tabs.iter().map(|q| {
            let ok = rsk::theta_tilde(&CoplacticElem::z(q)).unwrap() == characters::irreducible(&q.shape()).unwrap();
            verdict(ok, q.to_string())
        })))
    })?;
    r.sizes("Sigma' + Q-perp = Q", 1, 4, |m| {
        let mut span = Span::new();
        for c in SComp::all(m) {
            if CoplacticElem::from_alg(&algebra::x_element(&c)?)?.is_none() {
                return Ok(Err(format!("x_({c}) not in Q")));
            }
            span.insert(&rsk::x_in_z_basis(&c)?.to_vec()?);
        }
        for d in rsk::perp_spanning_set(m)? {
            span.insert(&d.to_vec()?);
        }
        let total = rsk::coplactic_data(m)?.tabs.len();
        Ok(verdict(span.dim() == total, format!("rank {} of {total}", span.dim())))
    })?;
    r.sizes("tau(z z') = <theta~ z, theta~ z'> on the z-basis", 1, 3, |m| {
        let cd = rsk::coplactic_data(m)?;
        let gram = rsk::coplactic_gram(m)?;
        let th: Vec<ClassFn> = cd.tabs.iter().map(|q| rsk::theta_tilde(&CoplacticElem::z(q))).collect::<Result<_>>()?;
        for i in 0..th.len() {
            for j in 0..th.len() {
                if gram[i][j] != characters::inner(&th[i], &th[j])? {
                    return Ok(Err(format!("{} {}", cd.tabs[i], cd.tabs[j])));
                }
            }
        }
        Ok(Ok(String::new()))
    })?;
    r.sizes("Q-perp is the radical of tau on Q", 1, 3, |m| {
        let null = linalg::nullspace(&rsk::coplactic_gram(m)?);
        let mut perp = Span::new();
        for d in rsk::perp_spanning_set(m)? {
            perp.insert(&d.to_vec()?);
        }
        Ok(verdict(null.len() == perp.dim() && null.iter().all(|v| perp.contains(v)), format!("{} vs {}", null.len(), perp.dim())))
    })?;
    r.sizes("w_n Z_Q = Z_(Q dual) and theta~(w_n z) = eps theta~(z)", 1, 4, |m| {
        let cd = rsk::coplactic_data(m)?;
        let w0 = SignedPerm::longest(m);
        let eps = ClassFn::sign(m);
        for (q, ms) in cd.tabs.iter().zip(&cd.members) {
            if ms.iter().any(|w| rsk::recording(&w0.compose(w).unwrap()) != q.dual()) {
                return Ok(Err(format!("class of {q}")));
            }
            let z = CoplacticElem::z(q);
            let wz = AlgElem::from_perm(&w0).multiply(&z.to_alg()?)?;
            if m <= 3 && rsk::theta_tilde_alg(&wz)? != eps.mul(&rsk::theta_tilde(&z)?)? {
                return Ok(Err(format!("theta~ at {q}")));
            }
        }
        Ok(Ok(String::new()))
    })?;
    let e = characters::w2_idempotents();
    let cd2 = rsk::coplactic_data(2)?;
    let cls = characters::class_data(2)?;
    let mut ok = true;
    for q in &cd2.tabs {
        let z = CoplacticElem::z(q);
        let za = z.to_alg()?;
        let mut f = ClassFn::zero(2);
        for (i, b) in cls.bips.iter().enumerate() {
            let t = algebra::tau(&za, &e.elems[b].to_alg()?)?;
            f = f.add(&ClassFn::indicator(b).scale(&(rat(8) * t / rat(cls.class_size[i] as i64))))?;
        }
        ok &= f == rsk::theta_tilde(&z)?;
    }
    r.record("theta~(x) = |W_2| sum tau(x E_l)/|class l| f_l on the z-basis", 2, verdict(ok, ""));
    let q: Bitab = "1 7, 6 9, 8 ; 2 3 5, 4".parse()?;
    r.record(
        "descent set of the bitableau 1 7, 6 9, 8 ; 2 3 5, 4",
        9,
        verdict(rsk::tableau_descents(&q) == gens_set(&["s1", "s3", "s6", "s8", "t2", "t3", "t4", "t5"]), ""),
    );
    let q: Bitab = "1 2 6 7 8 13, 9 11 12, 10 ; 3 14, 4, 5, 15".parse()?;
    let c = rsk::tableau_composition(&q)?;
    r.record("C(Q) of the 15-box bitableau is 2,-3,3,1,4,-2", 15, verdict(c == sc("2,-3,3,1,4,-2"), c.to_string()));
    Ok(())
}

// ---------------------------------------------------------------- hopf

fn perm(s: &str) -> SignedPerm {
    s.parse().expect("valid permutation literal")
}

fn hopf_suite(r: &mut Runner) -> Result<()> {
    let top = r.top(hopf::MAX_HOPF_GRADE);
    let checks = hopf::verify_bialgebra(top)?;
    r.out.extend(checks);
    let got = hopf::hopf_product(&perm("-1 2"), &perm("2 -1"));
    let want = ["-1 2 4 -3", "-1 3 4 -2", "-1 4 3 -2", "-2 3 4 -1", "-2 4 3 -1", "-3 4 2 -1"];
    let want = AlgElem::indicator(4, &want.iter().map(|s| perm(s)).collect::<Vec<_>>())?;
    r.record("product example (-1 2) * (2 -1)", 4, verdict(got == want, got.to_string()));
    let d = hopf::hopf_coproduct(&perm("-2 3 1 -4"));
    let mut want = TensorElem::zero();
    for (a, b) in [("", "-2 3 1 -4"), ("1", "-1 2 -3"), ("-2 1", "1 -2"), ("-2 3 1", "-1"), ("-2 3 1 -4", "")] {
        want.add_term(a.parse()?, b.parse()?, Rat::one());
    }
    r.record("coproduct example of -2 3 1 -4", 4, verdict(d == want, d.to_string()));
    r.sizes("shuffle product equals x_(n,m)(u x v), grades add", 1, 4, |m| {
        for i in 0..=m {
            for u in all_perms(i) {
                for v in all_perms(m - i) {
                    let p = hopf::hopf_product(&u, &v);
                    if p.n() != m || p != hopf::hopf_product_literal(&u, &v)? {
                        return Ok(Err(format!("({u}) ({v})")));
                    }
                }
            }
        }
        Ok(Ok(String::new()))
    })?;
    r.sizes("coproduct equals the coset formula, grades add", 1, 4, |m| {
        Ok(all_of(SignedPerm::all(m).into_iter().map(|w| {
            let d = hopf::hopf_coproduct(&w);
            let graded = d.terms.keys().all(|(u, v)| u.n() + v.n() == m);
            verdict(graded && d == hopf::hopf_coproduct_by_cosets(&w).unwrap(), w.to_string())
        })))
    })?;
    r.sizes("coproducts of x_(n) and x_(-n)", 1, 4, |m| {
        for sign in [1i32, -1] {
            let part = |k: usize| -> Result<AlgElem> {
                if k == 0 {
                    Ok(AlgElem::from_perm(&SignedPerm::empty()))
                } else {
                    algebra::x_element(&SComp::new(vec![sign * k as i32])?)
                }
            };
            let mut want = TensorElem::zero();
            for i in 0..=m {
                let (a, b) = (part(i)?, part(m - i)?);
                for (u, x) in a.terms() {
                    for (v, y) in b.terms() {
                        want.add_term(u.clone(), v.clone(), x * y);
                    }
                }
            }
            if hopf::alg_coproduct(&part(m)?) != want {
                return Ok(Err(format!("sign {sign}")));
            }
        }
        Ok(Ok(String::new()))
    })?;
    r.sizes("theta~(x_C . z) = Ind theta~_C(z) for C = (k,l)", 2, 4, |m| {
        for k in 1..m {
            let c = SComp::new(vec![k as i32, (m - k) as i32])?;
            let x = algebra::x_element(&c)?;
            let (a, b) = (rsk::coplactic_data(k)?, rsk::coplactic_data(m - k)?);
            for q1 in &a.tabs {
                for q2 in &b.tabs {
                    let (z1, z2) = (CoplacticElem::z(q1), CoplacticElem::z(q2));
                    let mut cross = AlgElem::zero(m);
                    for u in &a.members[a.index[q1]] {
                        for v in &b.members[b.index[q2]] {
                            cross.add_term(u.cross(v), Rat::one());
                        }
                    }
                    let lhs = rsk::theta_tilde_alg(&x.multiply(&cross)?)?;
                    let rhs = hopf::char_product(&rsk::theta_tilde(&z1)?, &rsk::theta_tilde(&z2)?)?;
                    if lhs != rhs {
                        return Ok(Err(format!("{c}: {q1} x {q2}")));
                    }
                }
            }
        }
        Ok(Ok(String::new()))
    })?;
    Ok(())
}

fn all_perms(n: usize) -> Vec<SignedPerm> {
    if n == 0 {
        vec![SignedPerm::empty()]
    } else {
        SignedPerm::all(n)
    }
}

// ---------------------------------------------------------------- symfun

fn symfun_suite(r: &mut Runner) -> Result<()> {
    r.sizes("ch(trivial) = h_n(tau)", 1, 4, |m| {
        Ok(verdict(symfun::ch(&ClassFn::trivial(m)).same_as(&symfun::h(m, CharTag::Tau)), ""))
    })?;
    r.sizes("ch(theta(x_(-n))) = phi_(-n)", 1, 4, |m| {
        let f = characters::induced_trivial(&SComp::new(vec![-(m as i32)])?)?;
        Ok(verdict(symfun::ch(&f).same_as(&symfun::phi_negative(m)), ""))
    })?;
    r.sizes("ch of the tensor power characters eta_n(rho)", 0, 4, |m| {
        for (a, e) in [(1, 0), (0, 1), (1, 1), (2, 1)] {
            let res = symfun::eta_character_check(a, e, m)?;
            if let Some((k, _)) = res.iter().find(|(_, ok)| !ok) {
                return Ok(Err(format!("rho = {a} tau + {e} eps at degree {k}")));
            }
        }
        Ok(Ok(String::new()))
    })?;
    r.sizes("semistandard tableaux: strip construction equals brute force", 1, 5, |m| {
        for mu in Partition::all(m) {
            for e in [vec![m], vec![1; m], vec![0, m], vec![m / 2, 0, m - m / 2]] {
                if symfun::semistandard_tableaux(&mu, &e) != symfun::semistandard_tableaux_brute(&mu, &e) {
                    return Ok(Err(format!("{mu} {e:?}")));
                }
            }
        }
        Ok(Ok(String::new()))
    })?;
    r.sizes("|BiTab(l, C)| equals the tableau count", 1, 5, |m| {
        let sbt = rsk::sbt(m);
        let comps_of: Vec<SComp> = sbt.iter().map(rsk::tableau_composition).collect::<Result<_>>()?;
        for c in SComp::all(m) {
            for l in Bip::all(m) {
                let target = l.star();
                let lhs = sbt.iter().zip(&comps_of).filter(|(q, d)| q.shape() == target && c.left_arrow(d)).count();
                let rhs = symfun::tab_pairs(&l, &c)?.len();
                if lhs != rhs {
                    return Ok(Err(format!("{l} {c}: {lhs} vs {rhs}")));
                }
            }
        }
        Ok(Ok(String::new()))
    })?;
    r.sizes("the explicit bijection and its inverse", 1, 4, |m| {
        for c in SComp::all(m) {
            for l in Bip::all(m) {
                let set: BTreeSet<Bitab> = symfun::bitab_set(&l, &c)?.into_iter().collect();
                let bij = symfun::bitab_bijection(&l, &c)?;
                let image: BTreeSet<Bitab> = bij.pairs.iter().map(|(_, q)| q.clone()).collect();
                if image != set || bij.pairs.len() != set.len() {
                    return Ok(Err(format!("{l} {c}: image")));
                }
                for (p, q) in &bij.pairs {
                    if &symfun::bitab_to_tab_pair(q, &c)? != p {
                        return Ok(Err(format!("{l} {c}: {q}")));
                    }
                }
            }
        }
        Ok(Ok(String::new()))
    })?;
    let cc = sc("2,-2,-3,1,-1,2,2,-2");
    let p = symfun::TabPair {
        d: vec![0, 0, 2, 0, 1, 0, 0, 0],
        r: vec![vec![1, 1, 3, 3, 4, 7], vec![5, 6, 7], vec![6]],
        s: vec![vec![2, 2, 3, 8], vec![8]],
    };
    let q: Bitab = "1 2 6 7 8 13, 9 11 12, 10 ; 3 14, 4, 5, 15".parse()?;
    let cd = symfun::cd_data(&cc, &p.d)?;
    let ok = cd.t == vec![2, 0, 2, 1, 1, 2, 2, 0]
        && cd.e == vec![0, 2, 1, 0, 0, 0, 0, 2]
        && cd.b == sc("2,-2,-1,2,1,1,2,2,-2")
        && symfun::tab_pair_to_bitab(&p)? == q
        && symfun::bitab_to_tab_pair(&q, &cc)? == p;
    r.record("the 15-box worked example of the bijection", 15, verdict(ok, ""));
    r.sizes("ch(xi_l) = s_(l*)", 1, 4, |m| {
        let mut images = BTreeSet::new();
        for l in Bip::all(m) {
            let s = symfun::ch(&characters::irreducible(&l)?).to_basis(Basis::Schur);
            if s != symfun::schur(&l.star()) {
                return Ok(Err(l.to_string()));
            }
            images.insert(s.coeffs.keys().next().cloned());
        }
        let stars: BTreeSet<Option<Bip>> = Bip::all(m).iter().map(|l| Some(l.star())).collect();
        Ok(verdict(images == stars, "image is not the set of s_(l*)"))
    })?;
    r.sizes("f = ch theta~ on Q and f i = ch theta on Sigma'", 1, 4, |m| {
        let cd = rsk::coplactic_data(m)?;
        for q in &cd.tabs {
            let z = CoplacticElem::z(q);
            if !symfun::ch(&rsk::theta_tilde(&z)?).same_as(&symfun::f_map(&z)) {
                return Ok(Err(format!("z[{q}]")));
            }
        }
        for c in SComp::all(m) {
            let lhs = symfun::f_map(&rsk::x_in_z_basis(&c)?);
            if !lhs.same_as(&symfun::ch(&characters::induced_trivial(&c)?)) {
                return Ok(Err(format!("x_({c})")));
            }
            // f(x_C) = Σ_D Π h_{t_i}(τ) h_{e_i}(ε).
            let mut rhs = SymFun::zero(Basis::Schur);
            for d in symfun::comp_set(&c) {
                let cd = symfun::cd_data(&c, &d)?;
                let a = symfun::h_product_expansion(&cd.t, CharTag::Tau);
                let b = symfun::h_product_expansion(&cd.e, CharTag::Eps);
                rhs = rhs.add(&a.mul(&b));
            }
            if !lhs.same_as(&rhs) {
                return Ok(Err(format!("h-expansion of x_({c})")));
            }
        }
        Ok(Ok(String::new()))
    })?;
    r.sizes("ch(f . g) = ch(f) ch(g) for irreducible f, g", 1, 4, |m| {
        for k in 0..=m {
            for a in Bip::all(k) {
                for b in Bip::all(m - k) {
                    let f = hopf::irreducible_any(&a)?;
                    let g = hopf::irreducible_any(&b)?;
                    let lhs = symfun::ch(&hopf::char_product(&f, &g)?);
                    if !lhs.same_as(&symfun::ch(&f).mul(&symfun::ch(&g))) {
                        return Ok(Err(format!("{a} . {b}")));
                    }
                }
            }
        }
        Ok(Ok(String::new()))
    })?;
    r.sizes("ch(ch^-1(p)) = p on power-sum monomials", 1, 4, |m| {
        Ok(all_of(Bip::all(m).into_iter().map(|mono| {
            let x = SymFun::monomial(Basis::PowerClass, mono.clone());
            verdict(symfun::ch(&symfun::ch_inverse(&x).unwrap()) == x, mono.to_string())
        })))
    })?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_are_positive_and_reflect() {
        for n in 1..=3 {
            let roots = positive_roots(n);
            assert_eq!(roots.len(), n * n);
            for (v, s) in &roots {
                assert!(is_positive(v));
                let img = act_on_vector(s, v);
                assert!(img.iter().zip(v).all(|(a, b)| *a == -b));
            }
        }
    }

    #[test]
    fn suites_pass_at_small_sizes() {
        for s in &SUITES[..SUITES.len() - 1] {
            for c in run_suite(s, 2, false).unwrap() {
                assert!(c.passed, "{} / {} at {}: {}", c.suite, c.label, c.n, c.detail);
            }
        }
    }

    #[test]
    fn envelope_is_enforced() {
        assert!(matches!(run_suite("algebra", 5, false), Err(Error::Envelope { .. })));
        assert!(matches!(run_suite("nope", 2, false), Err(Error::Parse(_))));
    }
}
