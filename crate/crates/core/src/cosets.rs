//! Minimal coset representatives `X_C`, descent fibers `Y_C`, the longest
//! representatives `η_C` and double cosets `W_C d W_D`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::comp::SComp;
use crate::error::{check_size, Error, Result};
use crate::group;
use crate::perm::{GenElem, SignedPerm};

/// `X_C^D`: the minimal length representatives of `W_D / W_C`.
#[derive(Clone, Debug, Serialize)]
pub struct CosetFamily {
    pub ambient: SComp,
    pub sub: SComp,
    pub reps: Vec<SignedPerm>,
}

/// Elements of `W_C`, in window order.
pub fn subgroup_elements(c: &SComp) -> Result<Vec<SignedPerm>> {
    let g = group::table(c.n())?;
    Ok(g.elems.iter().filter(|w| c.contains(w)).cloned().collect())
}

/// Whether `ℓ(wr) > ℓ(w)` for every `r ∈ S_C`.
pub fn is_min_rep(w: &SignedPerm, c: &SComp) -> bool {
    c.generators().into_iter().all(|r| w.is_ascent(r))
}

/// `X_C^D = X_C ∩ W_D` for `C ⊂ D`.
pub fn min_coset_reps(c: &SComp, d: &SComp) -> Result<CosetFamily> {
    check_size(c.n(), d.n())?;
    if !c.is_subcomp_of(d) {
        return Err(Error::Precondition(format!("W_({c}) is not contained in W_({d})")));
    }
    let g = group::table(c.n())?;
    let reps = g.elems.iter().filter(|w| d.contains(w) && is_min_rep(w, c)).cloned().collect();
    Ok(CosetFamily { ambient: d.clone(), sub: c.clone(), reps })
}

/// `X_C`.
pub fn x_set(c: &SComp) -> Result<Vec<SignedPerm>> {
    let whole = SComp::new(vec![c.n() as i32])?;
    Ok(min_coset_reps(c, &whole)?.reps)
}

/// `Y_C = {w : 𝐂(w) = C}`.
pub fn descent_fiber(c: &SComp) -> Result<Vec<SignedPerm>> {
    let g = group::table(c.n())?;
    Ok(g.elems.iter().filter(|w| &w.descent_composition() == c).cloned().collect())
}

/// Descent composition of `w ∈ W_D` relative to `W_D ≅ Π W_{d_i}`: on a
/// positive block the ordinary descent composition of the standardized
/// restriction, on a negative block (a symmetric group) the negated
/// classical descent composition.
pub fn relative_descent_composition(w: &SignedPerm, d: &SComp) -> Result<SComp> {
    if !d.contains(w) {
        return Err(Error::Precondition(format!("{w} is not in W_({d})")));
    }
    let mut parts = Vec::new();
    for (a, b, pos) in d.blocks() {
        let off = a as i32 - 1;
        let local: Vec<i32> = w.window()[a - 1..b]
            .iter()
            .map(|&x| if x > 0 { x - off } else { x + off })
            .collect();
        let c = SignedPerm::from_window_unchecked(local).descent_composition();
        if pos {
            parts.extend_from_slice(c.parts());
        } else {
            parts.extend(c.parts().iter().map(|p| -p));
        }
    }
    SComp::new(parts)
}

/// `Y_C^D = {w ∈ W_D : 𝐂_D(w) = C}`.
pub fn relative_descent_fiber(c: &SComp, d: &SComp) -> Result<Vec<SignedPerm>> {
    check_size(c.n(), d.n())?;
    let g = group::table(c.n())?;
    let mut out = Vec::new();
    for w in g.elems.iter().filter(|w| d.contains(w)) {
        if &relative_descent_composition(w, d)? == c {
            out.push(w.clone());
        }
    }
    Ok(out)
}

/// Longest element of `X^{(m)}_{(m', c)}` inside `W_m`, `m = m' + |c|`,
/// padded to `W_n` by the identity.
fn eta_step(m_prev: usize, c: i32, n: usize) -> SignedPerm {
    let k = c.unsigned_abs() as usize;
    let m = m_prev + k;
    let mut window: Vec<i32> = (1..=n as i32).collect();
    if c < 0 {
        // w_m · w_{(m', c)}: fixes [1, m'], sends the block to its reversed negative.
        for i in m_prev + 1..=m {
            window[i - 1] = -((m_prev + 1 + m - i) as i32);
        }
    } else {
        // σ_m · σ_{(m', c)} = (c+1, …, c+m', 1, …, c)
        for i in 1..=m_prev {
            window[i - 1] = (k + i) as i32;
        }
        for i in m_prev + 1..=m {
            window[i - 1] = (i - m_prev) as i32;
        }
    }
    SignedPerm::from_window_unchecked(window)
}

/// `η_C`, the longest element of `X_C`, as the product `η_{C,r} ⋯ η_{C,1}`
/// where `η_{C,i}` is the longest element of `X^{(m_i)}_{(m_{i-1}, c_i)}`
/// and `m_i = |c_1| + ⋯ + |c_i|`.
pub fn eta(c: &SComp) -> SignedPerm {
    let n = c.n();
    let mut acc = SignedPerm::identity(n);
    let mut m_prev = 0;
    for &part in c.parts() {
        acc = eta_step(m_prev, part, n).compose_unchecked(&acc);
        m_prev += part.unsigned_abs() as usize;
    }
    acc
}

/// `r_i = s_{i-1} ⋯ s_1 t`.
pub fn r_element(i: usize, n: usize) -> Result<SignedPerm> {
    let mut w = GenElem::T(1).to_perm(n)?;
    for j in 1..i {
        w = GenElem::S(j).to_perm(n)?.compose_unchecked(&w);
    }
    Ok(w)
}

/// `σ_{k,l,m}`: `i ↦ m+i` on `[1,k]`, `i ↦ i-k` on `[k+1, k+m]`, fixed elsewhere.
pub fn sigma_klm(k: usize, l: usize, m: usize) -> SignedPerm {
    let n = k + l;
    let window = (1..=n)
        .map(|i| {
            if i <= k {
                (m + i) as i32
            } else if i <= k + m {
                (i - k) as i32
            } else {
                i as i32
            }
        })
        .collect();
    SignedPerm::from_window_unchecked(window)
}

/// `X_{CD} = X_C^{-1} ∩ X_D`.
pub fn double_coset_reps(c: &SComp, d: &SComp) -> Result<Vec<SignedPerm>> {
    check_size(c.n(), d.n())?;
    let g = group::table(c.n())?;
    Ok(g.elems
        .iter()
        .filter(|w| is_min_rep(w, d) && is_min_rep(&w.inverse(), c))
        .cloned()
        .collect())
}

/// The element of `S'_n` equal to `w`, if any.
pub fn as_reflection(w: &SignedPerm) -> Option<GenElem> {
    let n = w.n();
    GenElem::all(n).into_iter().find(|r| &r.to_perm(n).expect("in range") == w)
}

/// The composition `E` with `S'_E = S'_C ∩ d S'_D d⁻¹`.
pub fn intersect_comp(c: &SComp, d: &SignedPerm, dd: &SComp) -> Result<SComp> {
    check_size(c.n(), dd.n())?;
    check_size(c.n(), d.n())?;
    if !(is_min_rep(d, dd) && is_min_rep(&d.inverse(), c)) {
        return Err(Error::Precondition(format!("{d} is not in X_(({c}),({dd}))")));
    }
    let n = c.n();
    let dinv = d.inverse();
    let conj: BTreeSet<GenElem> = dd
        .reflections()
        .into_iter()
        .filter_map(|r| as_reflection(&d.compose_unchecked(&r.to_perm(n).unwrap()).compose_unchecked(&dinv)))
        .collect();
    let target: BTreeSet<GenElem> = c.reflections().intersection(&conj).copied().collect();
    comp_with_reflections(n, &target)
        .ok_or_else(|| Error::Precondition("intersection is not of the form S'_E".into()))
}

/// The `E ⊨ n` with `S'_E = x`, if one exists.
pub fn comp_with_reflections(n: usize, x: &BTreeSet<GenElem>) -> Option<SComp> {
    let mut parts = Vec::new();
    let mut start = 1;
    for i in 1..=n {
        if i == n || !x.contains(&GenElem::S(i)) {
            let len = (i + 1 - start) as i32;
            parts.push(if x.contains(&GenElem::T(start)) { len } else { -len });
            start = i + 1;
        }
    }
    let e = SComp::new(parts).ok()?;
    (e.reflections() == *x).then_some(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> SComp {
        s.parse().unwrap()
    }
    fn p(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    #[test]
    fn subgroups_in_w2() {
        assert_eq!(subgroup_elements(&c("-2")).unwrap(), vec![p("1 2"), p("2 1")]);
        let w11: BTreeSet<_> = subgroup_elements(&c("1,1")).unwrap().into_iter().collect();
        let want: BTreeSet<_> = ["1 2", "-1 2", "1 -2", "-1 -2"].iter().map(|s| p(s)).collect();
        assert_eq!(w11, want);
        for n in 1..=4 {
            for cc in SComp::all(n) {
                assert_eq!(subgroup_elements(&cc).unwrap().len(), cc.subgroup_order());
            }
        }
    }

    #[test]
    fn coset_reps_in_w2() {
        let x: BTreeSet<_> = x_set(&c("-1,1")).unwrap().into_iter().collect();
        let want: BTreeSet<_> = ["1 2", "2 1", "-1 2", "-2 1"].iter().map(|s| p(s)).collect();
        assert_eq!(x, want);
        assert_eq!(x_set(&c("3")).unwrap(), vec![SignedPerm::identity(3)]);
        assert!(min_coset_reps(&c("2"), &c("-2")).is_err());
    }

    #[test]
    fn eta_is_longest_rep() {
        assert_eq!(eta(&c("-1,1")), p("-2 1"));
        assert!(eta(&c("4")).is_identity());
        for n in 1..=4 {
            for cc in SComp::all(n) {
                let x = x_set(&cc).unwrap();
                let max = x.iter().map(|w| w.length()).max().unwrap();
                let e = eta(&cc);
                assert!(x.contains(&e));
                assert_eq!(e.length(), max, "{cc}");
                assert_eq!(x.iter().filter(|w| w.length() == max).count(), 1);
                assert_eq!(e.descent_composition(), cc);
            }
        }
    }

    #[test]
    fn named_fibers() {
        assert_eq!(descent_fiber(&c("1,-1")).unwrap(), vec![p("1 -2"), p("2 -1")]);
        assert_eq!(descent_fiber(&c("-1,-1,-1")).unwrap(), vec![SignedPerm::longest(3)]);
        assert_eq!(descent_fiber(&c("1,1,1")).unwrap(), vec![SignedPerm::sigma_longest(3)]);
        let sw = SignedPerm::sigma_longest(3).compose(&SignedPerm::longest(3)).unwrap();
        assert_eq!(descent_fiber(&c("-3")).unwrap(), vec![sw]);
    }

    #[test]
    fn intersection_with_identity() {
        for cc in SComp::all(3) {
            assert_eq!(intersect_comp(&cc, &SignedPerm::identity(3), &cc).unwrap(), cc);
        }
        assert!(intersect_comp(&c("2"), &p("2 1"), &c("2")).is_err());
    }

    #[test]
    fn double_cosets_of_whole_group() {
        assert_eq!(double_coset_reps(&c("3"), &c("3")).unwrap(), vec![SignedPerm::identity(3)]);
    }
}
