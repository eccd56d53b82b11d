//! Acceptance criteria 1 to 9, run against the `descent` binary at zero
//! tolerance. Prints one pass/fail line per criterion and exits non-zero if
//! any criterion fails.

use std::path::Path;
use std::process::{Command, Output};
use std::time::Instant;

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_descent");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn golden(name: &str) -> Vec<u8> {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

type Outcome = Result<String, String>;

/// Runs `verify <suite> <n> --json`, requires exit 0, no failed check and
/// every label in `labels` present among passing checks.
fn suite(name: &str, n: usize, labels: &[&str]) -> Outcome {
    let out = run(&["verify", name, &n.to_string(), "--json"]);
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| format!("bad JSON from verify {name}: {e}"))?;
    let checks = v["checks"].as_array().ok_or("no checks array")?;
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| c["passed"] != Value::Bool(true))
        .map(|c| format!("{} at n={}: {}", c["label"], c["n"], c["detail"]))
        .collect();
    if !failed.is_empty() || out.status.code() != Some(0) {
        return Err(format!("exit {:?}; {}", out.status.code(), failed.join("; ")));
    }
    for l in labels {
        if !checks.iter().any(|c| c["label"] == *l) {
            return Err(format!("missing check `{l}`"));
        }
    }
    Ok(format!("{} checks", checks.len()))
}

fn criterion_1() -> Outcome {
    let out = run(&["tables2"]);
    if out.status.code() != Some(0) {
        return Err(format!("exit {:?}", out.status.code()));
    }
    if out.stdout != golden("tables2.txt") {
        return Err("tables2 output differs from tests/golden/tables2.txt".into());
    }
    let again = run(&["tables2"]);
    if again.stdout != out.stdout {
        return Err("output is not deterministic".into());
    }
    let v: Value = serde_json::from_slice(&run(&["tables2", "--json"]).stdout).map_err(|e| e.to_string())?;
    let notes: Vec<&str> = v.as_array().ok_or("no table array")?.iter().flat_map(|t| t["notes"].as_array().unwrap().iter()).filter_map(|n| n.as_str()).collect();
    if notes.len() != 8 || notes.iter().any(|n| !n.ends_with(": ok")) {
        return Err(format!("idempotent identities: {notes:?}"));
    }
    Ok("7 tables byte-identical, 8 identities verified by multiplication".into())
}

fn criterion_2() -> Outcome {
    for n in 1..=8usize {
        let out = run(&["comps", &n.to_string()]);
        let lines = String::from_utf8_lossy(&out.stdout).lines().count();
        if lines != 2 * 3usize.pow(n as u32 - 1) {
            return Err(format!("n = {n}: {lines} compositions"));
        }
    }
    if run(&["comps", "2"]).stdout != golden("comps2.txt") {
        return Err("comps 2 differs from the golden listing".into());
    }
    suite("core", 5, &["|Comp(m)| = 2*3^(m-1)"])
}

fn criterion_3() -> Outcome {
    suite(
        "algebra",
        4,
        &[
            "Sigma' is closed under multiplication",
            "theta(x_C x_D) = theta(x_C) theta(x_D)",
            "Ker theta has rank |Comp| - |Bip| with the difference basis",
            "the ideal generated by Ker theta is nilpotent",
        ],
    )
}

fn criterion_4() -> Outcome {
    suite(
        "cosets",
        5,
        &[
            "W_n is the disjoint union of the fibers Y_C",
            "X_C is the disjoint union of Y_D over C <- D",
            "eta_C is the unique longest element of X_C and C(eta_C) = C",
            "X_D = union of X^C_(C cap dD) d when C is parabolic or D semi-positive",
            "X_(-n) decomposes along sigma_(k,l,m)",
        ],
    )
}

fn criterion_5() -> Outcome {
    let out = run(&["desc", "9 -3 -2 -1 -4 5 8 -6 7"]);
    if String::from_utf8_lossy(&out.stdout).lines().next() != Some("1,-3,-1,2,-1,1") {
        return Err("desc example".into());
    }
    suite(
        "rsk",
        5,
        &[
            "RSK is a bijection onto same-shape pairs",
            "rsk(w^-1) = (Q, P)",
            "closures of both coplactic edge rules are the Q-fibers",
            "U' is constant on coplactic classes",
            "descent set of the bitableau 1 7, 6 9, 8 ; 2 3 5, 4",
            "C(Q) of the 15-box bitableau is 2,-3,3,1,4,-2",
            "w_n Z_Q = Z_(Q dual) and theta~(w_n z) = eps theta~(z)",
        ],
    )
}

fn criterion_6() -> Outcome {
    let a = suite(
        "characters",
        4,
        &[
            "irreducible characters are orthonormal with positive degree",
            "xi_(l,0) is inflated from the symmetric group",
            "xi of the dual bipartition is the sign twist",
            "the character table of Sigma' is triangular",
            "theta(x_-2)(x_11) = 6 and theta(x_11)(x_-2) = 4",
            "idempotents of W_2 are orthogonal, sum to 1 and map to indicators",
        ],
    )?;
    let b = suite(
        "rsk",
        4,
        &[
            "theta~(z_Q) = xi_(sh Q)",
            "tau(z z') = <theta~ z, theta~ z'> on the z-basis",
            "theta~(x) = |W_2| sum tau(x E_l)/|class l| f_l on the z-basis",
        ],
    )?;
    Ok(format!("{a} + {b}"))
}

fn criterion_7() -> Outcome {
    suite(
        "hopf",
        4,
        &[
            "product example (-1 2) * (2 -1)",
            "coproduct example of -2 3 1 -4",
            "x_C * x_D = x_(C⊔D)",
            "coproducts of x_(n) and x_(-n)",
            "self-duality",
            "Σ' closed under coproduct",
            "Q closed under product and coproduct",
            "θ commutes with product",
            "θ commutes with coproduct",
            "θ̃ commutes with product and coproduct",
            "Frobenius reciprocity",
        ],
    )
}

fn criterion_8() -> Outcome {
    suite(
        "symfun",
        5,
        &[
            "ch(trivial) = h_n(tau)",
            "ch(theta(x_(-n))) = phi_(-n)",
            "ch of the tensor power characters eta_n(rho)",
            "|BiTab(l, C)| equals the tableau count",
            "the explicit bijection and its inverse",
            "the 15-box worked example of the bijection",
            "f = ch theta~ on Q and f i = ch theta on Sigma'",
            "ch(xi_l) = s_(l*)",
        ],
    )
}

fn criterion_9() -> Outcome {
    let small = run(&["verify", "all", "2"]);
    if small.status.code() != Some(0) {
        return Err("verify all 2 did not exit 0".into());
    }
    let all = suite("all", 5, &[])?;
    let codes = [
        (run(&["desc", "1 1"]).status.code(), 2, "parse error"),
        (run(&["verify", "algebra", "5"]).status.code(), 3, "envelope"),
        (run(&["xset", "6", "6"]).status.code(), 3, "envelope"),
    ];
    for (got, want, what) in codes {
        if got != Some(want) {
            return Err(format!("{what}: exit {got:?}, expected {want}"));
        }
    }
    Ok(all)
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("golden tables I-VII for n = 2", criterion_1),
        ("|Comp(n)| = 2*3^(n-1) for n = 1..8", criterion_2),
        ("descent algebra closure, theta, kernel, nilpotency", criterion_3),
        ("coset structure and the sigma_(k,l,m) identity", criterion_4),
        ("RSK and coplactic classes", criterion_5),
        ("irreducible characters and theta~", criterion_6),
        ("Hopf algebra of signed permutations", criterion_7),
        ("characteristic map to symmetric functions", criterion_8),
        ("every invariant under verify all", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(d) => println!("criterion {}: PASS  {name} ({d}; {secs:.1}s)", i + 1),
            Err(d) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({d}; {secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
