//! Acceptance suite: one status line per criterion, exact equality throughout.
//!
//! Criterion 13 is a known failure: the residue identities do not hold with a
//! degree-independent constant for the formulas as implemented. The test
//! asserts that exactly the known set fails, so a regression or an
//! unexpected fix both show up.

use std::time::Instant;

use mirrorforge::exactnum::q;
use mirrorforge::{cohft, frob, genus1, ifun, loc, rmat, Rational, Report, Theory};

const KNOWN_FAILURES: &[u32] = &[13];

/// t⁵ coefficients of both closed forms from a hand expansion to order 6:
/// I_0 = 1 + c₅t⁵, I_1 = t + c₆t⁶, so τ' = 1 + 6(c₆ − c₅)t⁵ and
/// F₁[t⁵] = e·c₅ + 1/(12·5⁵) − 3(c₆ − c₅) with e the I_0 exponent.
fn order_six_oracle() -> (Rational, Rational) {
    let c5 = &q(1, 5).pow(5).unwrap() * &Rational::factorial(5).inv().unwrap();
    let c6 = &q(2, 5).pow(5).unwrap() * &Rational::factorial(6).inv().unwrap();
    let shared = &q(1, 12 * 3125) - &(&Rational::from_int(3) * &(&c6 - &c5));
    let tw = &(&(&q(5, 24) - &Rational::from_int(2)) * &c5) + &shared;
    let fj = &(&q(-31, 3) * &c5) + &shared;
    (tw, fj)
}

fn criterion_14(recorded: &(Rational, Rational)) -> Report {
    let mut rep = Report::new("oracle");
    rep.check_eq("twisted expected", None, &recorded.0, &q(-23, 1_800_000));
    rep.check_eq("fjrw expected", None, &recorded.1, &q(-1, 28_125));
    match (genus1::f1_closed_twisted(30), genus1::f1_closed_fjrw(30)) {
        (Ok(tw), Ok(fj)) => {
            rep.check_eq("twisted pipeline", Some(5), tw.coeff(5), &recorded.0);
            rep.check_eq("fjrw pipeline", Some(5), fj.coeff(5), &recorded.1);
        }
        (Err(e), _) | (_, Err(e)) => rep.error("closed forms", &e),
    }
    rep.finish()
}

fn both(a: Report, b: Report, name: &str) -> Report {
    let mut rep = Report::new(name);
    rep.absorb(a);
    rep.absorb(b);
    rep.finish()
}

fn main() {
    let start = Instant::now();
    let recorded = order_six_oracle();
    println!(
        "oracle recorded: twisted t^5 = {}, fjrw t^5 = {}",
        recorded.0, recorded.1
    );

    let mut results: Vec<(u32, Report)> = std::thread::scope(|s| {
        let ipp = s.spawn(|| ifun::ipp_reports(30, 20, 30));
        let jobs: Vec<(u32, std::thread::ScopedJoinHandle<Report>)> = vec![
            (
                4,
                s.spawn(|| {
                    both(
                        ifun::picard_fuchs_check(40, Theory::Twisted),
                        ifun::picard_fuchs_check(40, Theory::Fjrw),
                        "pf",
                    )
                }),
            ),
            (5, s.spawn(|| ifun::verify_club_spade(12))),
            (6, s.spawn(|| ifun::verify_zz_identity(30))),
            (7, s.spawn(|| ifun::yukawa(30).1)),
            (8, s.spawn(|| frob::verify_frobenius(20))),
            (9, s.spawn(|| rmat::verify_rmatrix(25))),
            (10, s.spawn(|| genus1::verify_genus_one(30))),
            (11, s.spawn(|| genus1::verify_comparison(30))),
            (12, s.spawn(|| cohft::verify_appendix(20))),
            (13, s.spawn(|| loc::verify_localization(15, 15))),
            (14, s.spawn(|| criterion_14(&recorded))),
        ];
        let mut out: Vec<(u32, Report)> = ipp
            .join()
            .expect("ipp thread")
            .into_iter()
            .zip(1..)
            .map(|(r, i)| (i, r))
            .collect();
        out.extend(jobs.into_iter().map(|(i, h)| (i, h.join().expect("criterion thread"))));
        out
    });
    results.sort_by_key(|(i, _)| *i);

    let mut failed = Vec::new();
    for (i, rep) in &results {
        let known = KNOWN_FAILURES.contains(i);
        let status = match (rep.passed(), known) {
            (true, _) => "PASS".to_string(),
            (false, true) => "FAIL (known, see ledger)".to_string(),
            (false, false) => "FAIL".to_string(),
        };
        println!(
            "criterion {i:>2}: {status:<24} {:>6} ms  [{}]",
            rep.elapsed_ms, rep.suite
        );
        if !rep.passed() {
            failed.push(*i);
            if let Some(f) = &rep.first_failure {
                println!("    first failure: {} (order {:?})", f.check, f.order);
            }
        }
    }
    println!("total {:?}", start.elapsed());
    assert_eq!(failed, KNOWN_FAILURES, "unexpected set of failing criteria");
}
