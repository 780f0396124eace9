//! Acceptance suite. Prints one line per criterion and exits nonzero if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use braidfill::braid::{full_twist, left_normal_form, positive_permutation_braid, words_equal, BraidWord};
use braidfill::dynamics::{check_f_respects_ident, horseshoe_f, perron_root, t_of_q, transition_matrix, OrbitPattern, SquarePoint, Q};
use braidfill::families::{beta_prime, fold_position, pi_q};
use braidfill::surgery::{ExtendedRational, SurgeredLink};
use braidfill::verifier::{filling_history, hdst_check, verify_magic, verify_thm42, verify_thm53, THM42_GRID};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn families() -> Outcome {
    let mut count = 0;
    for n in 3..=60u32 {
        for m in (1..=n / 3).filter(|&m| num_integer::gcd(m, n) == 1) {
            let q = format!("{m}/{n}");
            let p = pi_q(m, n).map_err(|e| e.to_string())?;
            ensure(p.is_full_cycle() && p.degree() == n as usize + 2, || format!("π_{q} is not an {}-cycle", n + 2))?;
            let fold = fold_position(m, n);
            let img = p.one_line();
            let up = img[..fold].windows(2).all(|w| w[0] < w[1]);
            let down = img[fold..].windows(2).all(|w| w[0] > w[1]);
            ensure(up && down, || format!("π_{q} is not unimodal with fold {fold}"))?;
            let b = beta_prime(m, n).map_err(|e| e.to_string())?.word;
            ensure(b.strands() == n as usize + 2 && b.letters().iter().all(|&l| l > 0), || format!("β'_{q} is not positive"))?;
            ensure(b.permutation() == p && b == positive_permutation_braid(&p), || format!("β'_{q} does not induce π_{q}"))?;
            let mut pairs = BTreeSet::new();
            for (x, y, _) in b.crossings() {
                ensure(pairs.insert((x.min(y), x.max(y))), || format!("β'_{q}: strands {x} and {y} cross twice"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} values of q"))
}

/// Inserts a trivial word or cancels a free pair somewhere in `w`.
fn mutate(w: &BraidWord, rng: &mut StdRng) -> BraidWord {
    let n = w.strands() as i32;
    let mut l = w.letters().to_vec();
    let i = rng.gen_range(1..n);
    let s = if rng.gen_bool(0.5) { 1 } else { -1 };
    let rel: Vec<i32> = match rng.gen_range(0..4) {
        0 => {
            if let Some(k) = (1..l.len()).find(|&k| l[k] == -l[k - 1]) {
                l.drain(k - 1..=k);
                return BraidWord::new(w.strands(), l).unwrap();
            }
            vec![s * i, -s * i]
        }
        1 if n >= 4 => {
            let j = rng.gen_range(1..n);
            if (i - j).abs() >= 2 {
                vec![s * i, j, -s * i, -j]
            } else {
                vec![-s * i, s * i]
            }
        }
        2 if i + 1 < n => vec![i, i + 1, i, -(i + 1), -i, -(i + 1)],
        3 if i + 1 < n => vec![-i, -(i + 1), -i, i + 1, i, i + 1],
        _ => vec![s * i, -s * i],
    };
    let at = rng.gen_range(0..=l.len());
    l.splice(at..at, rel);
    BraidWord::new(w.strands(), l).unwrap()
}

fn random_word(rng: &mut StdRng, n: usize, len: usize) -> BraidWord {
    let l = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(n, l).unwrap()
}

fn word_engine() -> Outcome {
    const WORDS: usize = 2000;
    const STEPS: usize = 50;
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut mutations = 0;
    for _ in 0..WORDS {
        let n = rng.gen_range(2..=10);
        let len = rng.gen_range(0..=20);
        let w = random_word(&mut rng, n, len);
        let nf = left_normal_form(&w);
        let mut v = w.clone();
        for _ in 0..STEPS {
            v = mutate(&v, &mut rng);
            mutations += 1;
            ensure(left_normal_form(&v) == nf, || format!("normal form changed: {w} became {v}"))?;
        }
    }
    for n in 2..=12 {
        let theta = full_twist(n).map_err(|e| e.to_string())?;
        for _ in 0..20 {
            let len = rng.gen_range(1..=30);
            let w = random_word(&mut rng, n, len);
            let ok = words_equal(&theta.compose(&w).unwrap(), &w.compose(&theta).unwrap()).map_err(|e| e.to_string())?;
            ensure(ok, || format!("θ_{n} does not commute with {w}"))?;
        }
    }
    Ok(format!("{mutations} mutations, θ_n central for n ≤ 12"))
}

fn thm42() -> Outcome {
    let mut runs = 0;
    for &(l, m) in &THM42_GRID {
        for k in 1..=3 {
            let rep = verify_thm42(l, m, k).map_err(|e| e.to_string())?;
            ensure(rep.passed && rep.recheck(), || format!("ν = {l}/{m}, k = {k}:\n{}", rep.text()))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} replays"))
}

fn thm53() -> Outcome {
    let red: Vec<Option<ExtendedRational>> =
        ["∞", "1/3", "4/3", "4/3", "1/3", "∞"].iter().map(|s| s.parse::<ExtendedRational>().ok().filter(|r| !r.is_infinite())).collect();
    for kappa in 1..=3u32 {
        let rep = verify_thm53(kappa).map_err(|e| e.to_string())?;
        ensure(rep.passed && rep.recheck(), || format!("κ = {kappa}:\n{}", rep.text()))?;
        let k = i64::from(kappa);
        let black: Vec<Option<ExtendedRational>> = vec![
            Some(ExtendedRational::plus_reciprocal(-4, k).unwrap()),
            Some(ExtendedRational::plus_reciprocal(-1, k).unwrap()),
            Some(ExtendedRational::new(1, k).unwrap()),
            None,
        ];
        let norm = |v: Vec<Option<ExtendedRational>>| v.into_iter().map(|r| r.filter(|r| !r.is_infinite())).collect::<Vec<_>>();
        let got_black = norm(filling_history(&rep.ledger, "black"));
        let got_red = norm(filling_history(&rep.ledger, "red"));
        ensure(got_black == black, || format!("κ = {kappa}: black ledger {got_black:?}"))?;
        ensure(got_red == red, || format!("κ = {kappa}: red ledger {got_red:?}"))?;
        let cert = rep.steps.last().and_then(|s| s.certificate.as_ref());
        ensure(cert.is_some_and(|c| c.verify()), || format!("κ = {kappa}: no verified certificate to γ"))?;
    }
    Ok("κ = 1, 2, 3 ledgers and certificates".into())
}

fn magic() -> Outcome {
    let rep = verify_magic().map_err(|e| e.to_string())?;
    ensure(rep.passed && rep.recheck(), || rep.text())?;
    let link = rep.link.ok_or("no final link")?;
    ensure(link.braid.strands() == 3 && link.axis, || format!("ended in {}", link.braid))?;
    let back = SurgeredLink::from_json(&link.to_json()).map_err(|e| e.to_string())?;
    ensure(back == link, || "link JSON does not round-trip".into())?;
    Ok(format!("{} + axis", link.braid))
}

fn dynamics() -> Outcome {
    let eps = 1e-12;
    for (m, n) in [(1, 3), (1, 4), (1, 5), (2, 7), (3, 10), (1, 10)] {
        let t = t_of_q(m, n, eps).map_err(|e| e.to_string())?.t;
        let p = perron_root(&transition_matrix(&OrbitPattern::of_q(m, n).unwrap()), eps).map_err(|e| e.to_string())?;
        ensure((t - p).abs() < 1e-6, || format!("{m}/{n}: t = {t}, Perron root {p}"))?;
    }
    // q = 1/3, 1/4, ..., 1/20 in decreasing order, so t must increase along it
    let ts: Vec<f64> = (3..=20).map(|n| t_of_q(1, n, eps).map(|p| p.t)).collect::<braidfill::Result<_>>().map_err(|e| e.to_string())?;
    ensure(ts.windows(2).all(|w| w[0] < w[1]), || format!("t not strictly decreasing in q: {ts:?}"))?;
    let t30 = t_of_q(1, 30, eps).map_err(|e| e.to_string())?.t;
    ensure(2.0 - t30 < 0.01, || format!("t(1/30) = {t30}"))?;
    Ok(format!("2 − t(1/30) = {:.3e}", 2.0 - t30))
}

fn horseshoe() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x4f5);
    let check = check_f_respects_ident(10_000, &mut rng);
    ensure(check.passed(), || format!("counterexample {:?}", check.counterexample))?;
    for (x, y) in [((0, 1), (0, 1)), ((2, 3), (2, 3))] {
        let p = SquarePoint::new(Q::new(x.0, x.1), Q::new(y.0, y.1)).unwrap();
        ensure(horseshoe_f(p) == p, || format!("({}, {}) is not fixed", p.x, p.y))?;
    }
    Ok(format!("{} fold pairs, fixed points (0,0) and (2/3,2/3)", check.pairs))
}

fn hypotheses() -> Outcome {
    let fixed: Vec<ExtendedRational> = (1..=200).map(|k| ExtendedRational::new(1, k).unwrap()).collect();
    let black: Vec<ExtendedRational> = (1..=200).map(|k| ExtendedRational::plus_reciprocal(-4, k).unwrap()).collect();
    ensure(hdst_check(&fixed), || "1/k fails the hypotheses".into())?;
    ensure(hdst_check(&black), || "−4 + 1/κ fails the hypotheses".into())?;
    let repeated = [fixed[0], fixed[1], fixed[0]];
    ensure(!hdst_check(&repeated), || "a repeated coefficient was accepted".into())?;
    Ok("1/k and −4 + 1/κ, k ≤ 200: distinct with growing a² + b²".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 family correctness", families, Duration::from_secs(10)),
        ("2 word engine", word_engine, Duration::from_secs(60)),
        ("3 fixed-string twist replay", thm42, Duration::from_secs(120)),
        ("4 four-component replay", thm53, Duration::from_secs(600)),
        ("5 magic chain", magic, Duration::from_secs(1)),
        ("6 dynamics cross-oracle", dynamics, Duration::from_secs(30)),
        ("7 tight horseshoe", horseshoe, Duration::from_secs(5)),
        ("8 surgery hypotheses", hypotheses, Duration::from_secs(5)),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = outcome.and_then(|d| if took <= limit { Ok(d) } else { Err(format!("{d}, but over the {limit:?} limit")) });
        match outcome {
            Ok(d) => println!("PASS {name} ({took:.2?}): {d}"),
            Err(e) => {
                failed += 1;
                println!("FAIL {name} ({took:.2?}): {e}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
