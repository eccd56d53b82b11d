//! The seven tables describing `Σ'(W_2)`, computed from the library.
//!
//! Elements of `W_2` are named by reduced words in `s = s_1`, `t = t_1`
//! (composition right to left), reflections of `S'_2` as `s`, `t`, `sts`,
//! and zero entries print as `.`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{self, AlgElem, SigmaExpr};
use crate::characters::{self, ClassFn};
use crate::comp::{Bip, SComp};
use crate::error::Result;
use crate::perm::{GenElem, SignedPerm};
use crate::Rat;

/// A rectangular table of strings with a title, column headers and optional footer lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub notes: Vec<String>,
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        let cols = self.header.len();
        let width: Vec<usize> = (0..cols)
            .map(|j| {
                self.rows.iter().map(|r| r[j].chars().count()).chain([self.header[j].chars().count()]).max().unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| -> String {
            let padded: Vec<String> =
                cells.iter().zip(&width).map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
            padded.join(" | ").trim_end().to_string()
        };
        writeln!(f, "{}", line(&self.header))?;
        writeln!(f, "{}", width.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().join("-+-"))?;
        for r in &self.rows {
            writeln!(f, "{}", line(r))?;
        }
        for n in &self.notes {
            writeln!(f, "{n}")?;
        }
        Ok(())
    }
}

/// Names of the elements of `W_2`, in the order `1, s, t, st, ts, sts, tst, w2`.
pub const W2_NAMES: [&str; 8] = ["1", "s", "t", "st", "ts", "sts", "tst", "w2"];

/// Compositions of 2 in the row order `2, (1,1), (-1,1), (1,-1), (-2), (-1,-1)`.
pub const W2_COMPS: [&str; 6] = ["2", "1,1", "-1,1", "1,-1", "-2", "-1,-1"];

fn word(name: &str) -> SignedPerm {
    let letters = if name == "w2" { "stst" } else if name == "1" { "" } else { name };
    let mut w = SignedPerm::identity(2);
    for ch in letters.chars() {
        let g = if ch == 's' { GenElem::S(1) } else { GenElem::T(1) };
        w = w.compose(&g.to_perm(2).expect("valid generator")).expect("same n");
    }
    w
}

/// `(name, element)` for every element of `W_2`.
pub fn w2_elements() -> Vec<(&'static str, SignedPerm)> {
    W2_NAMES.iter().map(|&n| (n, word(n))).collect()
}

fn element_name(w: &SignedPerm) -> &'static str {
    w2_elements().into_iter().find(|(_, u)| u == w).map(|(n, _)| n).expect("element of W_2")
}

fn reflection_name(g: GenElem) -> &'static str {
    match g {
        GenElem::S(1) => "s",
        GenElem::T(1) => "t",
        GenElem::T(2) => "sts",
        _ => unreachable!("not a reflection of S'_2"),
    }
}

fn reflection_set(set: &BTreeSet<GenElem>) -> String {
    // Listed as s, t, sts.
    let names: Vec<&str> = [GenElem::S(1), GenElem::T(1), GenElem::T(2)]
        .into_iter()
        .filter(|g| set.contains(g))
        .map(reflection_name)
        .collect();
    format!("{{{}}}", names.join(","))
}

fn element_sum(a: &AlgElem) -> String {
    let names: Vec<String> = w2_elements()
        .into_iter()
        .filter_map(|(n, w)| {
            let c = a.coeff(&w);
            if c.is_zero() {
                None
            } else if c.is_one() {
                Some(n.to_string())
            } else {
                Some(format!("{c}*{n}"))
            }
        })
        .collect();
    names.join("+")
}

fn cell(r: &Rat) -> String {
    if r.is_zero() {
        ".".into()
    } else {
        r.to_string()
    }
}

fn comps() -> Vec<SComp> {
    W2_COMPS.iter().map(|s| s.parse().expect("valid composition")).collect()
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Table I: elements, windows, ascent sets and descent compositions.
pub fn table1() -> Table {
    let rows = w2_elements()
        .into_iter()
        .map(|(n, w)| vec![n.to_string(), w.to_string(), reflection_set(&w.ascent_set()), w.descent_composition().to_string()])
        .collect();
    Table { title: "Table I. Elements".into(), header: strings(&["w", "window", "U'(w)", "C(w)"]), rows, notes: vec![] }
}

/// Table II: Coxeter elements `c_λ` and class sizes.
pub fn table2() -> Result<Table> {
    let cd = characters::class_data(2)?;
    let rows = cd
        .bips
        .iter()
        .zip(&cd.class_size)
        .map(|(l, &size)| vec![l.hat().to_string(), element_name(&characters::coxeter_element(l)).to_string(), size.to_string()])
        .collect();
    Ok(Table { title: "Table II. Conjugacy classes".into(), header: strings(&["lambda^", "c_lambda", "|class|"]), rows, notes: vec![] })
}

/// Table III: for each `C`, `|W_C|`, `S_C`, `x_C`, `y_C` and `𝒜_C`.
pub fn table3() -> Result<Table> {
    let mut rows = Vec::new();
    for c in comps() {
        rows.push(vec![
            c.to_string(),
            c.subgroup_order().to_string(),
            reflection_set(&c.generators()),
            element_sum(&algebra::x_element(&c)?),
            element_sum(&algebra::y_element(&c)?),
            reflection_set(&c.ascents()),
        ]);
    }
    Ok(Table {
        title: "Table III. Bases of Sigma'(W_2)".into(),
        header: strings(&["C", "|W_C|", "S_C", "x_C", "y_C", "A_C"]),
        rows,
        notes: vec![],
    })
}

/// Table IV: `θ(x_{λ̂})` in irreducible characters, columns labelled by
/// Specht's `χ_μ = ξ_{μ^*}`.
pub fn table4() -> Result<Table> {
    let bips = Bip::all(2);
    let mut header = vec![String::new()];
    header.extend(bips.iter().map(|m| format!("chi[{m}]")));
    let mut rows = Vec::new();
    for l in &bips {
        let dec = characters::decompose(&characters::induced_trivial(&l.hat())?)?;
        let mut row = vec![format!("theta(x[{}])", l.hat())];
        for m in &bips {
            row.push(cell(&dec.get(&m.star()).cloned().unwrap_or_else(Rat::zero)));
        }
        rows.push(row);
    }
    Ok(Table { title: "Table IV. Decomposition of induced characters".into(), header, rows, notes: vec![] })
}

/// Table V: the character table `π_λ(x_{μ̂})`.
pub fn table5() -> Result<Table> {
    let bips = Bip::all(2);
    let t = characters::sigma_character_table(2)?;
    let mut header = vec![String::new()];
    header.extend(bips.iter().map(|m| format!("x[{}]", m.hat())));
    let rows = bips
        .iter()
        .zip(&t)
        .map(|(l, r)| {
            let mut row = vec![format!("pi[{}]", l.hat())];
            row.extend(r.iter().map(cell));
            row
        })
        .collect();
    Ok(Table { title: "Table V. Character table of Sigma'(W_2)".into(), header, rows, notes: vec![] })
}

/// Table VI: the primitive idempotents in the `x`-basis, with their defining
/// identities checked by exact multiplication.
pub fn table6() -> Result<Table> {
    let e = characters::w2_idempotents();
    let cs = comps();
    let mut header = vec![String::new()];
    header.extend(cs.iter().map(|c| format!("x[{c}]")));
    let mut rows = Vec::new();
    for (l, x) in &ordered(&e.elems) {
        let mut row = vec![format!("E[{}]", l.hat())];
        row.extend(cs.iter().map(|c| cell(&x.coord(c))));
        rows.push(row);
    }
    let ok = |b: bool| if b { "ok" } else { "FAILED" };
    let mut orth = true;
    let mut sum = SigmaExpr::zero(2);
    for (l, x) in &e.elems {
        sum = sum.add(x)?;
        for (m, y) in &e.elems {
            let p = algebra::sigma_multiply(x, y)?;
            orth &= if l == m { &p == x } else { p.is_zero() };
        }
    }
    let one = SigmaExpr::basis(&"2".parse()?);
    let mut theta_ok = true;
    for (l, x) in &e.elems {
        theta_ok &= characters::theta(x)? == ClassFn::indicator(l);
    }
    let mut formula_ok = true;
    for c in &cs {
        let x = SigmaExpr::basis(c);
        formula_ok &= characters::theta_by_idempotents(&x, &e)? == characters::theta(&x)?;
    }
    Ok(Table {
        title: "Table VI. Orthogonal primitive idempotents".into(),
        header,
        rows,
        notes: vec![
            format!("E_l E_m = delta_lm E_l: {}", ok(orth)),
            format!("sum of E_l = 1: {}", ok(sum == one)),
            format!("theta(E_l) = f_l: {}", ok(theta_ok)),
            format!("theta(x) = |W| sum tau(x E_l)/|class l| f_l: {}", ok(formula_ok)),
        ],
    })
}

fn ordered<V: Clone>(m: &std::collections::BTreeMap<Bip, V>) -> Vec<(Bip, V)> {
    Bip::all(2).into_iter().filter_map(|b| m.get(&b).map(|v| (b, v.clone()))).collect()
}

/// Table VII: the Cartan matrix, with the block decomposition of `ℚΣ'(W_2)`.
pub fn table7() -> Result<Table> {
    let bips = Bip::all(2);
    let m = characters::cartan_matrix(&characters::w2_idempotents())?;
    let mut header = vec!["lambda^ \\ mu^".to_string()];
    header.extend(bips.iter().map(|b| b.hat().to_string()));
    let rows = bips
        .iter()
        .zip(&m)
        .map(|(l, r)| {
            let mut row = vec![l.hat().to_string()];
            row.extend(r.iter().map(|&v| if v == 0 { ".".into() } else { v.to_string() }));
            row
        })
        .collect();
    let notes = characters::w2_algebra_decomposition()?
        .into_iter()
        .map(|(label, b)| format!("{label}: {}", if b { "ok" } else { "FAILED" }))
        .collect();
    Ok(Table { title: "Table VII. Cartan matrix of Sigma'(W_2)".into(), header, rows, notes })
}

/// Tables I to VII in order.
pub fn all_tables() -> Result<Vec<Table>> {
    Ok(vec![table1(), table2()?, table3()?, table4()?, table5()?, table6()?, table7()?])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SignedPerm {
        s.parse().unwrap()
    }

    #[test]
    fn named_elements() {
        let expect = ["1 2", "2 1", "-1 2", "-2 1", "2 -1", "1 -2", "-2 -1", "-1 -2"];
        for ((_, w), e) in w2_elements().into_iter().zip(expect) {
            assert_eq!(w, p(e));
        }
        assert_eq!(word("w2"), word("tsts"));
        assert_eq!(word("w2"), SignedPerm::longest(2));
    }

    #[test]
    fn table_one_rows() {
        let t = table1();
        assert_eq!(t.rows[0], strings(&["1", "1 2", "{s,t,sts}", "2"]));
        assert_eq!(t.rows[4], strings(&["ts", "2 -1", "{t}", "1,-1"]));
        assert_eq!(t.rows[7], strings(&["w2", "-1 -2", "{}", "-1,-1"]));
    }

    #[test]
    fn table_three_sums() {
        let t = table3().unwrap();
        assert_eq!(t.rows[2][3], "1+s+t+st");
        assert_eq!(t.rows[3][3], "1+s+ts+sts");
        assert_eq!(t.rows[4][4], "tst");
        // 𝒜_C agrees with the ascent set of every element of Y_C.
        let t1 = table1();
        for row in &t.rows {
            for r in t1.rows.iter().filter(|r| r[3] == row[0]) {
                assert_eq!(r[2], row[5], "{}", row[0]);
            }
        }
    }

    #[test]
    fn tables_have_no_failures() {
        for t in all_tables().unwrap() {
            assert!(t.notes.iter().all(|n| n.ends_with(": ok")), "{t}");
        }
    }
}
