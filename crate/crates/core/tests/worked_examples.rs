use descent_algebra::algebra::{self, AlgElem, SigmaExpr};
use descent_algebra::hopf;
use descent_algebra::rsk::{self, Bitab};
use descent_algebra::verify;
use descent_algebra::{rat, SComp, SignedPerm};

fn p(s: &str) -> SignedPerm {
    s.parse().unwrap()
}

fn c(s: &str) -> SComp {
    s.parse().unwrap()
}

#[test]
fn descent_composition_of_a_nine_letter_word() {
    let w = p("9 -3 -2 -1 -4 5 8 -6 7");
    assert_eq!(w.descent_composition(), c("1,-3,-1,2,-1,1"));
}

#[test]
fn compositions_of_two() {
    let all: Vec<String> = SComp::all(2).iter().map(|c| c.to_string()).collect();
    assert_eq!(all, ["2", "1,1", "1,-1", "-2", "-1,1", "-1,-1"]);
}

#[test]
fn shuffle_product_of_two_letters() {
    let got = hopf::hopf_product(&p("-1 2"), &p("2 -1"));
    let want: Vec<SignedPerm> =
        ["-1 2 4 -3", "-1 3 4 -2", "-1 4 3 -2", "-2 3 4 -1", "-2 4 3 -1", "-3 4 2 -1"].iter().map(|s| p(s)).collect();
    assert_eq!(got, AlgElem::indicator(4, &want).unwrap());
}

#[test]
fn deconcatenation_coproduct() {
    let d = hopf::hopf_coproduct(&p("-2 3 1 -4"));
    assert_eq!(d.terms.len(), 5);
    assert_eq!(d.coeff(&p("-2 1"), &p("1 -2")), rat(1));
    assert_eq!(d.coeff(&p("1"), &p("-1 2 -3")), rat(1));
}

#[test]
fn bitableau_descents_and_composition() {
    let q: Bitab = "1 7, 6 9, 8 ; 2 3 5, 4".parse().unwrap();
    let names: Vec<String> = rsk::tableau_descents(&q).iter().map(|g| g.to_string()).collect();
    assert_eq!(names, ["s1", "s3", "s6", "s8", "t2", "t3", "t4", "t5"]);
    let q: Bitab = "1 2 6 7 8 13, 9 11 12, 10 ; 3 14, 4, 5, 15".parse().unwrap();
    assert_eq!(rsk::tableau_composition(&q).unwrap(), c("2,-3,3,1,4,-2"));
}

#[test]
fn product_in_the_descent_algebra_of_w2() {
    let prod = algebra::sigma_multiply(&SigmaExpr::basis(&c("1,1")), &SigmaExpr::basis(&c("-2"))).unwrap();
    let direct = algebra::x_element(&c("1,1")).unwrap().multiply(&algebra::x_element(&c("-2")).unwrap()).unwrap();
    assert_eq!(prod.to_alg().unwrap(), direct);
    assert_eq!(direct.augmentation(), rat(8));
}

#[test]
fn every_suite_passes_at_three() {
    let checks = verify::run_suite("all", 3, false).unwrap();
    assert!(checks.len() > 100);
    for ch in checks {
        assert!(ch.passed, "{} / {} at {}: {}", ch.suite, ch.label, ch.n, ch.detail);
    }
}
