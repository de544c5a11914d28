//! Acceptance suite: one PASS/FAIL line per criterion, with indented detail.
//! Runs as a plain binary (`harness = false`) so the lines always print.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use tracecurve::number_theory::conjecture::recheck;
use tracecurve::number_theory::{
    characterize_divisors, conjecture1_scan, conjecture2_scan, even_d_lemma_check, f_gcd_conjecture_scan, fib,
    gcd_always_one, gcd_pair, identity_failures, ScanOutcome,
};
use tracecurve::number_theory::predict::PredictionStatus;
use tracecurve::symbolic::{finite_field_spotcheck, reconstruct, verify, Reconstruction, Strategy};
use tracecurve::{CountReport, CurveParams, EnumerationCap, TraceCurve};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, detail: String::new() }
    }

    /// Record a line; a false `ok` fails the criterion.
    fn check(&mut self, ok: bool, line: impl AsRef<str>) {
        self.pass &= ok;
        let mark = if ok { "ok  " } else { "FAIL" };
        let _ = writeln!(self.detail, "    [{mark}] {}", line.as_ref());
    }

    fn note(&mut self, line: impl AsRef<str>) {
        let _ = writeln!(self.detail, "    {}", line.as_ref());
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn artifact_dir() -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance-artifacts");
    std::fs::create_dir_all(&dir).expect("artifact dir");
    dir
}

/// Writes the outcome as JSON, reads it back, and rechecks every witness from
/// the file alone.
fn persist_and_recheck(name: &str, outcome: &ScanOutcome) -> (bool, PathBuf) {
    let path = artifact_dir().join(name);
    std::fs::write(&path, serde_json::to_vec_pretty(outcome).unwrap()).unwrap();
    let back: ScanOutcome = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    let ok = back == *outcome && back.counterexamples.iter().all(|c| recheck(c).unwrap_or(false));
    (ok, path)
}

fn curve(q: u64, n: u32, d: u32) -> TraceCurve {
    TraceCurve::new(CurveParams::from_q(q, n, d).unwrap(), &EnumerationCap::default()).unwrap()
}

/// `1 + q^{n-1+d} + extra`.
fn baseline_plus(q: u64, n: u32, d: u32, extra: u64) -> BigUint {
    BigUint::one() + big(q).pow(n - 1 + d) + big(extra)
}

type Counts = BTreeMap<(u64, u32, u32), CountReport>;

fn criterion_1(counts: &mut Counts) -> Outcome {
    let mut out = Outcome::new();
    let t = Instant::now();

    // frozen closed forms
    let exact: [((u64, u32, u32), BigUint); 13] = [
        ((2, 4, 2), big(33)),
        ((3, 4, 2), big(460)),
        ((4, 4, 2), baseline_plus(4, 4, 2, 0)),
        ((5, 4, 2), baseline_plus(5, 4, 2, 0)),
        ((7, 4, 2), baseline_plus(7, 4, 2, 0)),
        ((8, 4, 2), baseline_plus(8, 4, 2, 4 * 7 * 512)),
        ((13, 4, 2), baseline_plus(13, 4, 2, 4 * 12 * 2197)),
        ((2, 6, 3), big(257)),
        ((3, 6, 3), baseline_plus(3, 6, 3, 0)),
        ((4, 6, 3), baseline_plus(4, 6, 3, 0)),
        ((5, 6, 3), baseline_plus(5, 6, 3, 0)),
        ((2, 8, 4), baseline_plus(2, 8, 4, 0)),
        ((3, 8, 4), baseline_plus(3, 8, 4, 0)),
    ];
    for ((q, n, d), expected) in exact {
        let r = curve(q, n, d).point_count().unwrap();
        out.check(
            r.brute_count == expected && r.agrees != Some(false),
            format!("(q,n,d)=({q},{n},{d}): brute {} expected {expected}", r.brute_count),
        );
        counts.insert((q, n, d), r);
    }
    let bonus_q: Vec<u64> = counts
        .iter()
        .filter(|((_, n, d), r)| (*n, *d) == (4, 2) && r.bonus > BigUint::ZERO)
        .map(|((q, _, _), _)| *q)
        .collect();
    out.check(
        bonus_q.iter().all(|q| q % 5 == 3) && bonus_q == [3, 8, 13],
        format!("n=4, d=2 bonus exactly at q ≡ 3 (mod 5): {bonus_q:?}"),
    );

    // n = 6, d = 2: G from the congruence conditions on q
    let listed = [(3u64, 1u64), (5, 7), (7, 1), (9, 7), (13, 3)];
    let congruence = [(3u64, 1u64), (5, 7), (7, 3), (9, 1), (13, 3)];
    for ((q, g), (_, g_listed)) in congruence.into_iter().zip(listed) {
        let r = curve(q, 6, 2).point_count().unwrap();
        let expected = baseline_plus(q, 6, 2, (g - 1) * (q - 1) * q.pow(5));
        let pred = r.prediction.as_ref().unwrap();
        let ok = r.brute_count == expected
            && pred.value_g == big(g)
            && r.status() == PredictionStatus::ExactOddQOnly
            && r.agrees == Some(true);
        let remark = if g == g_listed {
            String::new()
        } else {
            format!(" (tabulated G={g_listed} differs; the congruence conditions give G={g})")
        };
        out.check(ok, format!("(q,n,d)=({q},6,2): brute {} = congruence G={g}{remark}", r.brute_count));
        counts.insert((q, 6, 2), r);
    }

    // even characteristic: conjectural route, reported with artifacts
    for (q, g) in [(4u64, 3u64), (2, 1)] {
        let c = curve(q, 6, 2);
        let r = c.point_count().unwrap();
        let pred = r.prediction.clone().unwrap();
        out.check(
            pred.status == PredictionStatus::Conjectural && pred.value_g == big(g),
            format!("(q,n,d)=({q},6,2): flagged conjectural, route value G={g}"),
        );
        let matches = r.agrees == Some(true);
        if matches {
            out.check(true, format!("(q,n,d)=({q},6,2): brute {} matches", r.brute_count));
        } else {
            let observed = r.observed_g.clone().map(|g| g.to_string()).unwrap_or("?".into());
            out.note(format!(
                "(q,n,d)=({q},6,2): MISMATCH brute {} vs predicted {} (observed G={observed})",
                r.brute_count,
                r.predicted.clone().unwrap()
            ));
            // the discrepancy must be carried by a re-checkable artifact
            let scan = conjecture2_scan(q, 6, &EnumerationCap::default()).unwrap();
            let (rechecks, path) = persist_and_recheck(&format!("conjecture2-q{q}-m6.json"), &scan);
            let f = c.field();
            let witnessed: Vec<&[u64]> = scan.counterexamples.iter().map(|w| w.alpha.as_slice()).collect();
            let same_field = scan.counterexamples.iter().all(|w| w.modulus == f.modulus());
            let (mut conforming, mut violating, mut unexplained) = (0usize, 0usize, 0usize);
            for x in c.special_x() {
                let alpha = match c.alpha_of(&x) {
                    Ok(a) if a != f.one() => a,
                    _ => continue,
                };
                if f.pow_u128(&alpha, q as u128 + 2) == f.one() {
                    conforming += 1;
                } else {
                    violating += 1;
                    if !witnessed.contains(&alpha.coeffs()) {
                        unexplained += 1;
                    }
                }
            }
            out.check(
                !scan.is_clean() && rechecks && same_field && violating > 0 && unexplained == 0,
                format!(
                    "(q,n,d)=({q},6,2): {violating} bonus x have α^(q+2) ≠ 1, all among {} rechecked witnesses in {}; {conforming} conform",
                    scan.counterexamples.len(),
                    path.display()
                ),
            );
        }
        counts.insert((q, 6, 2), r);
    }

    // (3, 8, 2): conjectural with H = gcd(5, 85)
    let r = curve(3, 8, 2).point_count().unwrap();
    let pred = r.prediction.clone().unwrap();
    out.check(
        pred.status == PredictionStatus::Conjectural && pred.h == Some(big(5)),
        format!("(q,n,d)=(3,8,2): conjectural, H={}", pred.h.clone().unwrap()),
    );
    let verdict = if r.agrees == Some(true) { "match" } else { "disagreement (finding)" };
    out.note(format!(
        "(q,n,d)=(3,8,2): brute {} vs predicted {} (G={}): {verdict}",
        r.brute_count,
        r.predicted.clone().unwrap(),
        pred.value_g
    ));
    counts.insert((3, 8, 2), r);

    let secs = t.elapsed().as_secs_f64();
    out.check(secs < 120.0, format!("runtime {secs:.1}s"));
    out
}

fn criterion_2(counts: &Counts) -> Outcome {
    let mut out = Outcome::new();
    let mut checked = 0;
    for ((q, n, d), r) in counts.iter().filter(|((_, n, d), _)| *n == 2 * *d) {
        let qd = big(*q).pow(*d);
        let g = (&qd + 1u32).gcd(&big(q * q - q - 1));
        let expected = &qd + (g - 1u32) * big(q - 1);
        out.check(
            BigUint::from(r.special_x) == expected,
            format!("(q,n,d)=({q},{n},{d}): special_x {} = {expected}", r.special_x),
        );
        checked += 1;
    }
    out.check(checked == 13, format!("{checked} half-degree cases checked"));
    out
}

fn criterion_3() -> Outcome {
    let mut out = Outcome::new();
    let c = characterize_divisors(25).unwrap();
    let primes: Vec<String> = c.factorization.distinct().iter().map(|(p, _)| p.to_string()).collect();
    out.check(
        c.m_d == big(167_761) && primes == ["11", "101", "151"] && c.is_complete(),
        format!("d=25: M = {} = {}", c.m_d, primes.join("·")),
    );
    for (q, g) in [(19u64, 11u64), (23, 101), (179, 151)] {
        let got = gcd_pair(&big(q), 25);
        out.check(got == big(g), format!("gcd(q^25+1, q²−q−1) at q={q}: {got}"));
    }
    for (d, t, residue) in [(5, 11u64, 8u64), (7, 29, 6), (9, 19, 15), (11, 199, 138)] {
        let c = characterize_divisors(d).unwrap();
        let found = c.admissible.contains(&(big(t), big(residue)));
        out.check(found, format!("d={d}: admissible ({t}, {residue}) in {:?}", pairs(&c.admissible)));
    }
    out
}

fn pairs(v: &[(BigUint, BigUint)]) -> Vec<(String, String)> {
    v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

fn criterion_4() -> Outcome {
    let mut out = Outcome::new();
    let q = big(79);
    let g = (q.pow(30) + 1u32).gcd(&(&q * &q - &q - 1u32));
    out.check(
        (&g % 61u32) == BigUint::ZERO && gcd_pair(&q, 30) == g,
        format!("61 | gcd(79^30+1, 79²−79−1) = {g}"),
    );
    let f = fib(29).unwrap() + 1u32;
    out.check((&f % 61u32) == BigUint::ZERO, format!("61 | F_29 + 1 = {f}"));
    out
}

fn criterion_5() -> Outcome {
    let mut out = Outcome::new();
    let failures = identity_failures(200);
    out.check(failures.is_empty(), format!("seven Fibonacci/Lucas identities for k ≤ 200: {} failures", failures.len()));
    for d in [3, 4, 8, 12, 16, 24, 32] {
        out.check(gcd_always_one(d).unwrap(), format!("gcd_always_one({d})"));
    }
    let bad: Vec<u32> = (2..=60).step_by(2).filter(|&d| !even_d_lemma_check(d).unwrap()).collect();
    out.check(bad.is_empty(), format!("even-d lemma for even d ≤ 60: failures {bad:?}"));
    out
}

fn criterion_6(rec: &Reconstruction, secs: f64) -> Outcome {
    let mut out = Outcome::new();
    let t = Instant::now();
    let v = verify(rec, true).unwrap();
    out.check(
        v.f1.matches(),
        format!(
            "F1 equals the printed polynomial up to sign {} ({} computed / {} printed monomials; 61 was the tabulated count)",
            v.f1.sign, v.f1.computed_terms, v.f1.expected_terms
        ),
    );
    out.check(v.f1_denominator.matches(), "F1 denominator matches up to sign");
    out.check(v.g1_degree == Some(240), format!("deg G1 = {:?}", v.g1_degree));
    out.check(v.g2_degree == Some(344), format!("deg G2 = {:?}", v.g2_degree));
    for f in [&v.g1, &v.g2] {
        out.check(
            f.ok() && f.diffs.is_empty(),
            format!("{}: published factorization expands exactly (sign {}, content {})", f.name, f.sign, f.content),
        );
    }
    for (i, k, ok) in &v.cyclotomic_identifications {
        out.check(*ok, format!("p{i} = Φ{k}"));
    }
    out.check(
        v.g1_cross_check == Some(true),
        format!("G1 via {} equals G1 via the other strategy", v.primary_strategy.label()),
    );
    let total = secs + t.elapsed().as_secs_f64();
    out.check(total < 600.0, format!("runtime {total:.1}s"));
    out
}

fn criterion_7(rec: &Reconstruction) -> Outcome {
    let mut out = Outcome::new();
    let cap = EnumerationCap::default();
    for q in [3u64, 5, 7, 9, 11, 13] {
        let s = finite_field_spotcheck(rec, q, &cap).unwrap();
        let orders: Vec<u128> = s.alphas.iter().map(|a| a.order).collect();
        out.check(
            s.ok(),
            format!("q={q}: {} qualifying x, {} distinct α of orders {orders:?}", s.qualifying_x, s.alphas.len()),
        );
        if s.qualifying_x == 0 {
            out.note(format!("q={q}: no curve-arising α ∉ {{0,1}}, so the check is vacuous here"));
        }
        if q == 7 {
            let hits = s.p4_coincidences();
            let is_four = |a: &Vec<u64>| a.first() == Some(&4) && a[1..].iter().all(|&c| c == 0);
            out.check(hits.len() == 1 && is_four(&hits[0]), format!("q=7: α = 4 is a root of p4: {hits:?}"));
        }
    }
    out
}

fn criterion_8() -> Outcome {
    let mut out = Outcome::new();
    let cap = EnumerationCap::default();
    let mut report = |label: &str, q: u64, m: u32, scan: ScanOutcome| {
        if scan.is_clean() {
            out.check(true, format!("conjecture {label} ({q},{m}): clean over {} candidates", scan.candidates));
        } else {
            let (ok, path) = persist_and_recheck(&format!("conjecture{label}-q{q}-m{m}.json"), &scan);
            out.check(
                ok,
                format!(
                    "conjecture {label} ({q},{m}): {} counterexamples, artifact {} rechecks",
                    scan.counterexamples.len(),
                    path.display()
                ),
            );
        }
    };
    for (q, n) in [(3, 4), (5, 4), (7, 4), (9, 4), (3, 6), (5, 6), (2, 8), (3, 8)] {
        report("2", q, n, conjecture2_scan(q, n, &cap).unwrap());
    }
    for (q, m) in [(3, 4), (5, 4), (3, 6)] {
        report("1", q, m, conjecture1_scan(q, m, &cap).unwrap());
    }
    let fibgcd = f_gcd_conjecture_scan(99);
    out.check(fibgcd.is_clean(), "gcd(F_d, F_{d−1}+1) ∈ {1, 2} for odd d ≤ 99");
    out
}

fn criterion_9(counts: &Counts) -> Outcome {
    let mut out = Outcome::new();
    let mut checked = 0;
    for ((q, n, d), r) in counts {
        let pairs = (*q as u128).pow(2 * *n);
        if pairs > 10_000_000 {
            continue;
        }
        let affine = curve(*q, *n, *d).affine_oracle_count(false).unwrap();
        out.check(
            BigUint::from(affine + 1) == r.brute_count,
            format!("(q,n,d)=({q},{n},{d}): {affine} affine + 1 = {}", r.brute_count),
        );
        checked += 1;
    }
    out.check(checked > 0, format!("{checked} cases with q^(2n) ≤ 10^7"));
    out
}

fn main() {
    let start = Instant::now();
    let mut counts = Counts::new();
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();

    results.push((1, "oracle/closed-form agreement table", criterion_1(&mut counts)));
    results.push((2, "half-degree special-x count", criterion_2(&counts)));
    results.push((3, "divisor characterization examples", criterion_3()));
    results.push((4, "q = 79, d = 30 divisibility case", criterion_4()));
    results.push((5, "Fibonacci/Lucas identity suites", criterion_5()));
    let t = Instant::now();
    let rec = reconstruct(Strategy::SubresultantPrs).unwrap();
    let rec_secs = t.elapsed().as_secs_f64();
    results.push((6, "symbolic reconstruction", criterion_6(&rec, rec_secs)));
    results.push((7, "finite-field spot checks of the eliminants", criterion_7(&rec)));
    results.push((8, "conjecture scans", criterion_8()));
    results.push((9, "affine cross-oracle", criterion_9(&counts)));

    let mut all = true;
    for (n, title, o) in &results {
        all &= o.pass;
        println!("{} criterion {n}: {title}", if o.pass { "PASS" } else { "FAIL" });
        print!("{}", o.detail);
    }
    let passed = results.iter().filter(|r| r.2.pass).count();
    println!("{passed}/{} criteria passed in {:.1}s", results.len(), start.elapsed().as_secs_f64());
    if !all {
        std::process::exit(1);
    }
}
