//! Acceptance checks: one PASS/FAIL line per criterion. Expected values
//! are written out literally below; time limits are wall-clock seconds.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use dqsym::checks;
use dqsym::dqsym::{f_basis, DQSymElt};
use dqsym::lincomb::rat;
use dqsym::poly::Monomial;
use dqsym::quotient::{
    basis_check, conjectured_basis, formule_r, hilbert_dq, hilbert_q, hilbert_r_diag, hilbert_r_univariate,
    plethystic_guess, predicted_dq, psi, HilbertMatrix,
};
use dqsym::series::UnivariateSeries;
use dqsym::Bicomposition;
use dqsym_cli::cmd_shuffle;

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bc(s: &str) -> Bicomposition {
    s.parse().expect("literal bicomposition")
}

fn matrix(n: usize, rows: &[&[u64]]) -> HilbertMatrix {
    HilbertMatrix::from_rows(n, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn dq_displays() -> Vec<HilbertMatrix> {
    vec![
        matrix(1, &[&[1]]),
        matrix(2, &[&[1], &[1, 1]]),
        matrix(3, &[&[2], &[2, 2], &[1, 2, 2]]),
        matrix(4, &[&[5], &[5, 5], &[3, 7, 5], &[1, 3, 5, 5]]),
        matrix(5, &[&[14], &[14, 14], &[9, 24, 14], &[4, 14, 24, 14], &[1, 4, 9, 14, 14]]),
    ]
}

fn c1_shuffle() -> Outcome {
    let expected: BTreeSet<String> = [
        "2,0,0,2/1,3,1,0",
        "2,0,2/1,4,0",
        "2,0,0,2/1,1,3,0",
        "2,0,2/2,3,0",
        "2,0,2/1,1,3",
        "2,2/2,3",
        "2,0,2,0/1,1,0,3",
        "2,2,0/2,0,3",
        "0,2,0,2/1,1,3,0",
        "0,2,2/1,1,3",
        "0,2,2,0/1,1,0,3",
        "0,4,0/1,1,3",
        "0,2,2,0/1,0,1,3",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let r = cmd_shuffle("2,0/1,3", "0,2/1,0").map_err(|e| e.to_string())?;
    let got: Vec<String> = r.text.lines().map(str::to_string).collect();
    ensure(got.len() == 13, || format!("{} elements", got.len()))?;
    let got: BTreeSet<String> = got.into_iter().collect();
    ensure(got == expected, || format!("got {got:?}"))
}

fn c2_fbasis() -> Outcome {
    let expected: DQSymElt = [
        "2,0/1,1",
        "1,1,0/1,0,1",
        "1,1,0/0,1,1",
        "2,0,0/0,1,1",
        "0,2,0/1,0,1",
        "1,1,0,0/0,0,1,1",
        "1,0,1,0/0,1,0,1",
        "0,1,1,0/1,0,0,1",
    ]
    .iter()
    .map(|s| DQSymElt::m(bc(s)))
    .fold(DQSymElt::zero(), |acc, m| acc.add(&m));
    let got = f_basis(&bc("2,0/1,1"));
    ensure(got == expected, || format!("got {got}"))
}

fn c3_kernel() -> Outcome {
    for n in 3..=5 {
        let r = checks::kernel(n, (2, 2));
        ensure(r.passes(), || format!("n = {n}: {:?}", r.failures.first()))?;
    }
    Ok(())
}

fn c4_hilbert() -> Outcome {
    for want in dq_displays() {
        let got = hilbert_dq(want.n);
        ensure(got == want, || format!("n = {}:\n{got}", want.n))?;
        ensure(got.band_vanishes == Some(true), || format!("n = {}: band", want.n))?;
    }
    Ok(())
}

fn c5_prediction() -> Outcome {
    for n in 1..=5 {
        let (p, h) = (predicted_dq(n), hilbert_dq(n));
        ensure(p == h, || format!("n = {n}: predicted\n{p}\ncomputed\n{h}"))?;
    }
    Ok(())
}

fn c6_hilbert_q() -> Outcome {
    for n in 1..=5 {
        let m = hilbert_dq(n);
        let q = hilbert_q(n);
        for k in 0..n {
            let c = q.coeff(k).expect("polynomial");
            let (bottom, first) = (m.entry((k as u32, 0)), m.entry((0, k as u32)));
            ensure(c == rat(bottom as i64) && c == rat(first as i64), || {
                format!("n = {n}, k = {k}: formula {c}, bottom row {bottom}, first column {first}")
            })?;
        }
    }
    Ok(())
}

fn c7_basis() -> Outcome {
    let mono = |xs: &[u32], ys: &[u32]| Monomial::from_dense(xs, ys);
    type Sets = BTreeMap<(u32, u32), BTreeSet<Monomial>>;
    let sets = |entries: Vec<((u32, u32), Vec<Monomial>)>| -> Sets {
        entries.into_iter().map(|(d, ms)| (d, ms.into_iter().collect())).collect()
    };
    let b1 = sets(vec![((0, 0), vec![Monomial::one()])]);
    let b2 = sets(vec![
        ((0, 0), vec![Monomial::one()]),
        ((1, 0), vec![mono(&[0, 1], &[0, 0])]),
        ((0, 1), vec![mono(&[0, 0], &[0, 1])]),
    ]);
    let b3 = sets(vec![
        ((0, 0), vec![Monomial::one()]),
        ((1, 0), vec![mono(&[0, 0, 1], &[0; 3]), mono(&[0, 1, 0], &[0; 3])]),
        ((0, 1), vec![mono(&[0; 3], &[0, 0, 1]), mono(&[0; 3], &[0, 1, 0])]),
        ((2, 0), vec![mono(&[0, 0, 2], &[0; 3]), mono(&[0, 1, 1], &[0; 3])]),
        ((1, 1), vec![mono(&[0, 0, 1], &[0, 0, 1]), mono(&[0, 0, 1], &[0, 1, 0])]),
        ((0, 2), vec![mono(&[0; 3], &[0, 0, 2]), mono(&[0; 3], &[0, 1, 1])]),
    ]);
    for (n, want) in [(1, b1), (2, b2), (3, b3)] {
        let got = conjectured_basis(n);
        ensure(got == want, || format!("B_{n} = {got:?}"))?;
    }
    for n in 1..=4 {
        let r = basis_check(n);
        ensure(r.passes(), || format!("n = {n}: failing bidegrees {:?}", r.failures()))?;
    }
    Ok(())
}

fn c8_rdiag() -> Outcome {
    let displays = [
        (1, 0, matrix(1, &[&[1]])),
        (2, 3, matrix(2, &[&[1], &[0, 1], &[0, 1, 1], &[1, 0, 0, 1]])),
        (
            3,
            5,
            matrix(
                3,
                &[&[2], &[2, 2], &[1, 4, 2], &[0, 3, 4, 2], &[0, 1, 3, 4, 2], &[1, 0, 0, 1, 2, 2]],
            ),
        ),
    ];
    for (n, k, want) in displays {
        let got = hilbert_r_diag(n, k);
        ensure(got == want, || format!("n = {n}:\n{got}"))?;
    }
    Ok(())
}

fn c9_psi() -> Outcome {
    let listed = [
        UnivariateSeries::from_integers(&[1]),
        UnivariateSeries::from_integers(&[1, 0, 0, 1]),
        UnivariateSeries::from_integers(&[1, 0, 0, 1, 2, 2]),
    ];
    for (i, want) in listed.iter().enumerate() {
        let n = i + 1;
        ensure(&psi(n) == want, || format!("psi({n}) = {}", psi(n)))?;
        let r = hilbert_r_univariate(n);
        let bound = r.bound().expect("truncated");
        ensure(r.agrees_up_to(want, bound), || format!("runi({n}) = {r}"))?;
    }
    for n in 1..=5 {
        ensure(formule_r(n, 12).agrees_up_to(&psi(n), 12), || {
            format!("n = {n}: {} vs {}", formule_r(n, 12), psi(n))
        })?;
    }
    Ok(())
}

fn c10_guess() -> Outcome {
    // 1 + qt + q^3 + q^2 t + q t^2 + t^3 - q^3 t - q^2 t^2 - q t^3 + ...
    let displayed: BTreeMap<(usize, usize), i64> = [
        ((0, 0), 1),
        ((1, 1), 1),
        ((3, 0), 1),
        ((2, 1), 1),
        ((1, 2), 1),
        ((0, 3), 1),
        ((3, 1), -1),
        ((2, 2), -1),
        ((1, 3), -1),
    ]
    .into_iter()
    .collect();
    let g = plethystic_guess(2, (4, 4));
    let mut negative = false;
    for t in 0..=4 {
        for i in 0..=t {
            let c = g.coeff(i, t - i).ok_or("coefficient beyond truncation")?;
            let want = rat(displayed.get(&(i, t - i)).copied().unwrap_or(0));
            ensure(c == want, || format!("q^{i} t^{}: {c}", t - i))?;
            negative |= c < rat(0);
        }
    }
    ensure(negative, || "no negative coefficient".into())
}

fn c11_duality() -> Outcome {
    let r = checks::duality(3);
    ensure(r.passes() && r.checked > 0, || format!("{:?}", r.failures.first()))
}

fn c12_lyndon() -> Outcome {
    let r = checks::lyndon(4);
    ensure(r.passes(), || format!("{:?}", r.failures))
}

fn c13_frobenius() -> Outcome {
    let r = checks::frobenius(3, (3, 3), 4, (2, 2));
    ensure(r.passes(), || format!("{:?}", r.failures.first()))
}

fn c14_hopf() -> Outcome {
    let r = checks::hopf(4);
    ensure(r.passes(), || format!("{:?}", r.failures.first()))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 14] = [
        ("quasi-shuffle example", 1, c1_shuffle),
        ("F-basis example", 1, c2_fbasis),
        ("kernel of the Hivert action", 30, c3_kernel),
        ("Hilbert matrices M1..M5", 60, c4_hilbert),
        ("recursive prediction of the Hilbert matrices", 60, c5_prediction),
        ("univariate Hilbert series formula", 60, c6_hilbert_q),
        ("candidate monomial basis", 120, c7_basis),
        ("quotient by diagonal invariants", 120, c8_rdiag),
        ("Psi series", 60, c9_psi),
        ("plethystic non-freeness witness", 10, c10_guess),
        ("duality with DNSym", 60, c11_duality),
        ("Lyndon freeness", 60, c12_lyndon),
        ("Frobenius characteristics", 60, c13_frobenius),
        ("Hopf axioms", 60, c14_hopf),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(*limit), || {
                format!("took {:.1}s, limit {limit}s", elapsed.as_secs_f64())
            })
        });
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({:.2}s)", i + 1, elapsed.as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({:.2}s): {e}", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
