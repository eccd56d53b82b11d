use descent_algebra::algebra::{self, SigmaExpr};
use descent_algebra::rsk;
use descent_algebra::{Bip, GenElem, SComp, SignedPerm};
use proptest::prelude::*;

fn signed_perm(max_n: usize) -> impl Strategy<Value = SignedPerm> {
    (1..=max_n).prop_flat_map(|n| {
        let base: Vec<i32> = (1..=n as i32).collect();
        (Just(base).prop_shuffle(), prop::collection::vec(any::<bool>(), n)).prop_map(|(w, signs)| {
            let win = w.into_iter().zip(signs).map(|(x, neg)| if neg { -x } else { x }).collect();
            SignedPerm::new(win).unwrap()
        })
    })
}

fn pair(max_n: usize) -> impl Strategy<Value = (SignedPerm, SignedPerm)> {
    signed_perm(max_n).prop_flat_map(|u| {
        let n = u.n();
        let base: Vec<i32> = (1..=n as i32).collect();
        (Just(u), Just(base).prop_shuffle(), prop::collection::vec(any::<bool>(), n)).prop_map(|(u, w, signs)| {
            let win = w.into_iter().zip(signs).map(|(x, neg)| if neg { -x } else { x }).collect();
            (u, SignedPerm::new(win).unwrap())
        })
    })
}

fn scomp(max_n: usize) -> impl Strategy<Value = SComp> {
    prop::collection::vec((1i32..=3, any::<bool>()), 1..=max_n)
        .prop_map(|ps| SComp::new(ps.into_iter().map(|(p, neg)| if neg { -p } else { p }).collect()).unwrap())
}

fn comp_pair(max_n: usize) -> impl Strategy<Value = (SComp, SComp)> {
    (1..=max_n).prop_flat_map(|n| {
        let all = SComp::all(n);
        (prop::sample::select(all.clone()), prop::sample::select(all))
    })
}

proptest! {
    #[test]
    fn text_formats_round_trip(w in signed_perm(9), c in scomp(6)) {
        prop_assert_eq!(w.to_string().parse::<SignedPerm>().unwrap(), w.clone());
        prop_assert_eq!(c.to_string().parse::<SComp>().unwrap(), c.clone());
        let b = w.cycle_type();
        prop_assert_eq!(b.to_string().parse::<Bip>().unwrap(), b);
    }

    #[test]
    fn composition_is_associative_with_inverses((u, v) in pair(8)) {
        let uv = u.compose(&v).unwrap();
        prop_assert_eq!(uv.inverse(), v.inverse().compose(&u.inverse()).unwrap());
        prop_assert_eq!(uv.compose(&v.inverse()).unwrap(), u.clone());
        prop_assert!(uv.length() <= u.length() + v.length());
    }

    #[test]
    fn length_statistics_agree(w in signed_perm(8)) {
        prop_assert_eq!(w.length(), w.inverse().length());
        prop_assert_eq!(w.t_length(), w.window().iter().filter(|&&x| x < 0).count());
        let win = w.window();
        let mut by_formula = w.t_length();
        for j in 0..win.len() {
            for i in 0..j {
                by_formula += usize::from(win[i] > win[j]) + usize::from(win[i] + win[j] < 0);
            }
        }
        prop_assert_eq!(w.length(), by_formula);
    }

    #[test]
    fn ascents_are_detected_by_length(w in signed_perm(8)) {
        let n = w.n();
        for g in GenElem::all(n) {
            let longer = w.compose(&g.to_perm(n).unwrap()).unwrap().length() > w.length();
            prop_assert_eq!(w.is_ascent(g), longer, "{} at {}", w, g);
        }
        prop_assert_eq!(w.ascent_set(), w.descent_composition().ascents());
        prop_assert_eq!(w.descent_composition().n(), n);
    }

    #[test]
    fn cycle_type_is_a_class_function((u, g) in pair(8)) {
        let conj = g.compose(&u).unwrap().compose(&g.inverse()).unwrap();
        prop_assert_eq!(conj.cycle_type(), u.cycle_type());
    }

    #[test]
    fn rsk_round_trips(w in signed_perm(8)) {
        let (p, q) = rsk::rsk(&w);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(rsk::rsk_inverse(&p, &q).unwrap(), w.clone());
        prop_assert_eq!(rsk::rsk(&w.inverse()), (q.clone(), p));
        prop_assert_eq!(rsk::tableau_composition(&q).unwrap(), w.descent_composition());
    }

    #[test]
    fn longest_element_dualizes_recording(w in signed_perm(7)) {
        let w0 = SignedPerm::longest(w.n());
        prop_assert_eq!(rsk::recording(&w0.compose(&w).unwrap()), rsk::recording(&w).dual());
    }

    #[test]
    fn descent_algebra_product_matches_group_algebra((c, d) in comp_pair(4)) {
        let p = algebra::sigma_multiply(&SigmaExpr::basis(&c), &SigmaExpr::basis(&d)).unwrap();
        let direct = algebra::x_element(&c).unwrap().multiply(&algebra::x_element(&d).unwrap()).unwrap();
        prop_assert_eq!(p.to_alg().unwrap(), direct);
    }
}
