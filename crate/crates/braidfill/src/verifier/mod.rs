//! Step-by-step replays of the twist and conjugacy chains, with checkable
//! certificates.

pub mod checkpoints;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::braid::{conjugacy_search, words_equal, BraidWord, ConjugacyCertificate, SearchBudget};
use crate::error::{Error, Result};
use crate::families::{beta, gamma, zeta_word, BLACK, BLUE, FIXED, GREEN, RED};
use crate::surgery::{ExtendedRational, LedgerEntry, SurgeredLink};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub description: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<ConjugacyCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub passed: bool,
    pub steps: Vec<Step>,
    pub ledger: Vec<LedgerEntry>,
    /// The last state reached.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub link: Option<SurgeredLink>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Re-checks every certificate and the pass flags, independently of how
    /// the report was produced.
    pub fn recheck(&self) -> bool {
        let certs_ok = self.steps.iter().all(|s| s.certificate.as_ref().is_none_or(|c| !s.passed || c.verify()));
        certs_ok && self.passed == (!self.steps.is_empty() && self.steps.iter().all(|s| s.passed))
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            let mark = if s.passed { "ok  " } else { "FAIL" };
            let _ = write!(out, "{mark} {}", s.description);
            if !s.detail.is_empty() {
                let _ = write!(out, ": {}", s.detail);
            }
            out.push('\n');
        }
        let _ = writeln!(out, "{}: {}", self.name, if self.passed { "pass" } else { "fail" });
        out
    }
}

/// Runs a chain of operations, stopping at the first failure.
struct Replay {
    state: Option<SurgeredLink>,
    steps: Vec<Step>,
    stopped: bool,
}

impl Replay {
    fn new(description: &str, start: Result<SurgeredLink>) -> Self {
        let mut r = Replay { state: None, steps: Vec::new(), stopped: false };
        match start {
            Ok(l) => {
                r.steps.push(Step { description: description.into(), passed: true, detail: l.braid.to_string(), certificate: None });
                r.state = Some(l);
            }
            Err(e) => r.fail(description, e.to_string()),
        }
        r
    }

    fn fail(&mut self, description: &str, detail: String) {
        self.steps.push(Step { description: description.into(), passed: false, detail, certificate: None });
        self.stopped = true;
    }

    fn op(&mut self, description: &str, f: impl FnOnce(&SurgeredLink) -> Result<SurgeredLink>) {
        if self.stopped {
            return;
        }
        let cur = self.state.as_ref().expect("state present until stopped");
        match f(cur) {
            Ok(next) => {
                let detail = next.braid.to_string();
                self.steps.push(Step { description: description.into(), passed: true, detail, certificate: None });
                self.state = Some(next);
            }
            Err(e) => self.fail(description, e.to_string()),
        }
    }

    /// Conjugation whose result must equal a known braid.
    fn conjugate_onto(&mut self, conjugator: &BraidWord, expected: &BraidWord) {
        let description = format!("conjugate by {}", word_text(conjugator));
        if self.stopped {
            return;
        }
        let cur = self.state.as_ref().expect("state present until stopped");
        let source = cur.braid.clone();
        match cur.conjugate(conjugator) {
            Ok(next) => {
                let cert = ConjugacyCertificate { conjugator: conjugator.clone(), source, target: expected.clone() };
                let passed = cert.verify();
                let detail = if passed { expected.to_string() } else { format!("result differs from {expected}") };
                self.steps.push(Step { description, passed, detail, certificate: Some(cert) });
                self.stopped |= !passed;
                self.state = Some(next);
            }
            Err(e) => self.fail(&description, e.to_string()),
        }
    }

    fn check(&mut self, description: &str, f: impl FnOnce(&SurgeredLink) -> Result<(bool, String)>) {
        if self.stopped {
            return;
        }
        let cur = self.state.as_ref().expect("state present until stopped");
        match f(cur) {
            Ok((passed, detail)) => {
                self.steps.push(Step { description: description.into(), passed, detail, certificate: None });
                self.stopped |= !passed;
            }
            Err(e) => self.fail(description, e.to_string()),
        }
    }

    fn expect_fillings(&mut self, expected: &[(&str, Option<ExtendedRational>)]) {
        let description = expected
            .iter()
            .map(|(n, r)| format!("r({n}) = {}", r.map_or("none".to_string(), |r| r.to_string())))
            .collect::<Vec<_>>()
            .join(", ");
        self.check(&description, |l| {
            let mut bad = Vec::new();
            for (name, want) in expected {
                let got = l.filling(name)?;
                if got != *want {
                    bad.push(format!("r({name}) is {}", got.map_or("none".to_string(), |r| r.to_string())));
                }
            }
            Ok((bad.is_empty(), bad.join(", ")))
        });
    }

    /// Certifies that the current braid is conjugate to `target`.
    fn conjugate_to(&mut self, description: &str, target: &BraidWord, budget: SearchBudget) {
        if self.stopped {
            return;
        }
        let cur = self.state.as_ref().expect("state present until stopped");
        match conjugacy_search(&cur.braid, target, budget) {
            Ok(Some(cert)) => {
                let passed = cert.verify();
                let detail = format!("conjugator {}", word_text(&cert.conjugator));
                self.steps.push(Step { description: description.into(), passed, detail, certificate: Some(cert) });
                self.stopped |= !passed;
            }
            Ok(None) => self.fail(description, "no conjugator found within the search budget".into()),
            Err(e) => self.fail(description, e.to_string()),
        }
    }

    fn finish(self, name: String) -> VerificationReport {
        let passed = !self.stopped && self.steps.iter().all(|s| s.passed);
        let ledger = self.state.as_ref().map(|l| l.ledger.clone()).unwrap_or_default();
        VerificationReport { name, passed, steps: self.steps, ledger, link: self.state }
    }
}

fn word_text(w: &BraidWord) -> String {
    if w.is_empty() {
        "the empty word".into()
    } else {
        w.letters().iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
    }
}

fn q(b: i64, a: i64) -> Option<ExtendedRational> {
    Some(ExtendedRational::new(b, a).expect("nonzero"))
}

const INF: Option<ExtendedRational> = Some(ExtendedRational::INFINITY);

/// The name of the knotted part of `γ_ν`'s closure.
pub const KNOT: &str = "knot";

/// `γ_ν` with the fixed string and the rest of the closure as components.
pub fn gamma_link(l: u32, m: u32) -> Result<SurgeredLink> {
    let g = gamma(l, m)?;
    let n = g.word.strands();
    SurgeredLink::new(g.word, true, vec![(FIXED.to_string(), vec![1]), (KNOT.to_string(), (2..=n).collect())])
}

/// The values of ν replayed when none is given.
pub const THM42_GRID: [(u32, u32); 5] = [(0, 1), (1, 2), (1, 3), (2, 3), (3, 4)];

/// `1/k` filling on the fixed string of `γ_{ℓ/m}` gives `β_{m/((k+3)m+ℓ)}`.
pub fn verify_thm42(l: u32, m: u32, k: u32) -> Result<VerificationReport> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let target_n = (k + 3) * m + l;
    let target = beta(m, target_n)?.word;
    let k = i64::from(k);
    let start = gamma_link(l, m).and_then(|s| s.with_filling(FIXED, ExtendedRational::new(1, k)?));
    let mut r = Replay::new(&format!("γ_{l}/{m} with r(fixed) = 1/{k}"), start);
    r.op(&format!("{:+} twist on the fixed string", -k), |s| s.twist_fixed(FIXED, -k, 0));
    r.expect_fillings(&[(FIXED, INF)]);
    r.op("erase the fixed string", |s| s.erase_component(FIXED));
    let description = format!("equals β_{m}/{target_n}");
    if !r.stopped {
        let cur = r.state.as_ref().expect("state present");
        match words_equal(&cur.braid, &target) {
            Ok(true) => {
                let cert = ConjugacyCertificate {
                    conjugator: BraidWord::identity(target.strands()),
                    source: cur.braid.clone(),
                    target: target.clone(),
                };
                r.steps.push(Step { description, passed: true, detail: "equal as words".into(), certificate: Some(cert) });
            }
            Ok(false) => r.conjugate_to(&description, &target, SearchBudget::default()),
            Err(e) => r.fail(&description, e.to_string()),
        }
    }
    Ok(r.finish(format!("thm42 ν={l}/{m} k={k}")))
}

/// The explicit conjugators of the ζ chain, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaConjugators {
    pub first: Vec<i32>,
    pub second: Vec<i32>,
    pub third: Vec<i32>,
}

impl Default for ZetaConjugators {
    fn default() -> Self {
        ZetaConjugators {
            first: vec![-7, -7, -2, -4, -3, -6, -5, -4],
            second: vec![-6, 7],
            third: vec![7, 6, 5, 4, 3, 2, 1, 1, 2, 3, 4, 5, 6, 7],
        }
    }
}

/// Names of the ζ components in the replay.
pub const ZETA_COMPONENTS: [&str; 4] = [RED, BLACK, BLUE, GREEN];

pub fn zeta_link() -> SurgeredLink {
    let z = zeta_word();
    let comps = ZETA_COMPONENTS.iter().map(|&c| (c.to_string(), z.role(c).expect("ζ role").to_vec())).collect();
    SurgeredLink::new(z.word, true, comps).expect("ζ components are closure cycles")
}

/// Filling black in `ζ` with `−4 + 1/κ` gives `γ_{κ/(κ+1)}` with its axis.
pub fn verify_thm53(kappa: u32) -> Result<VerificationReport> {
    verify_thm53_with(kappa, &ZetaConjugators::default(), SearchBudget::default())
}

pub fn verify_thm53_with(kappa: u32, conj: &ZetaConjugators, budget: SearchBudget) -> Result<VerificationReport> {
    if kappa == 0 {
        return Err(Error::InvalidParameter("κ must be at least 1".into()));
    }
    let k = i64::from(kappa);
    let b0 = ExtendedRational::plus_reciprocal(-4, k)?;
    let start = zeta_link().with_filling(RED, ExtendedRational::INFINITY).and_then(|s| s.with_filling(BLACK, b0));
    let mut r = Replay::new(&format!("ζ with r(red) = ∞, r(black) = {b0}"), start);
    r.check("red links black once and nothing else", |s| {
        let lk = [s.linking_number(RED, BLACK)?, s.linking_number(RED, BLUE)?, s.linking_number(RED, GREEN)?];
        Ok((lk == [1, 0, 0], format!("lk = {lk:?}")))
    });
    let word = |n: usize, l: &[i32]| BraidWord::new(n, l.to_vec());
    let (first, second, third) = (word(11, &conj.first)?, word(8, &conj.second)?, word(8, &conj.third)?);
    r.conjugate_onto(&first, &word(11, &checkpoints::AFTER_FIRST_CONJUGATION)?);
    r.op("+3 twist on red", |s| s.twist_fixed(RED, 3, 0));
    r.expect_fillings(&[(RED, q(1, 3)), (BLACK, Some(ExtendedRational::plus_reciprocal(-1, k)?))]);
    r.conjugate_onto(&second, &word(8, &checkpoints::AFTER_SECOND_CONJUGATION)?);
    r.op("+1 twist on the axis", |s| s.twist_axis(1));
    r.expect_fillings(&[(RED, q(4, 3)), (BLACK, q(1, k))]);
    r.conjugate_onto(&third, &word(8, &checkpoints::AFTER_THIRD_CONJUGATION)?);
    r.check("red and black unlinked", |s| {
        let lk = s.linking_number(RED, BLACK)?;
        Ok((lk == 0, format!("lk = {lk}")))
    });
    r.op(&format!("{:+} twist on black", -k), |s| s.twist_fixed(BLACK, -k, 0));
    r.expect_fillings(&[(RED, q(4, 3)), (BLACK, INF)]);
    r.op("erase black", |s| s.erase_component(BLACK));
    r.op("-1 twist on the axis", |s| s.twist_axis(-1));
    r.expect_fillings(&[(RED, q(1, 3))]);
    r.op("-3 twist on red", |s| s.twist_fixed(RED, -3, 0));
    r.expect_fillings(&[(RED, INF)]);
    r.op("erase red", |s| s.erase_component(RED));
    let target = gamma(kappa, kappa + 1)?.word;
    r.conjugate_to(&format!("conjugate to γ_{kappa}/{}", kappa + 1), &target, budget);
    Ok(r.finish(format!("thm53 κ={kappa}")))
}

/// Extra conjugation allowed when matching the +3 twist of the magic chain:
/// the template only appears after `σ5⁻²`.
pub const MAGIC_TWIST_DEPTH: usize = 2;

/// From `γ_{0/1}` down to a 3-strand braid whose closure with its axis is
/// the magic manifold.
pub fn verify_magic() -> Result<VerificationReport> {
    let w = |n: usize, l: &[i32]| BraidWord::new(n, l.to_vec());
    let (s4, s2, s12) = (w(6, &[-4])?, w(3, &[2])?, w(3, &[1, 2])?);
    let start = gamma_link(0, 1).and_then(|s| {
        let mut s = s;
        for c in s.components.iter_mut().filter(|c| c.name == FIXED) {
            c.name = RED.to_string();
        }
        s.validate().map(|_| s)
    });
    let mut r = Replay::new("γ_0/1 with the fixed string in red", start);
    r.op("conjugate by -4", |s| s.conjugate(&s4));
    r.op("+3 twist on red", |s| s.twist_fixed(RED, 3, MAGIC_TWIST_DEPTH));
    r.check("three strands left", |s| Ok((s.braid.strands() == 3, s.braid.to_string())));
    r.op("conjugate by 2", |s| s.conjugate(&s2));
    r.op("+1 twist on the axis", |s| s.twist_axis(1));
    r.op("conjugate by 1 2", |s| s.conjugate(&s12));
    r.check("closure and axis have three components", |s| {
        let count = s.components.len() + usize::from(s.axis);
        Ok((count == 3 && s.braid.strands() == 3, format!("{count} components, {}", s.braid)))
    });
    Ok(r.finish("magic".into()))
}

/// The hypothesis of hyperbolic Dehn surgery on a sequence of fillings:
/// all distinct, with `a² + b²` strictly increasing.
pub fn hdst_check(coeffs: &[ExtendedRational]) -> bool {
    let increasing = coeffs.windows(2).all(|p| p[0].norm() < p[1].norm());
    let distinct = coeffs.iter().enumerate().all(|(i, c)| !coeffs[..i].contains(c));
    increasing && distinct
}

/// A component's coefficient before the first step and after every twist,
/// the sequence the proofs quote.
pub fn filling_history(ledger: &[LedgerEntry], name: &str) -> Vec<Option<ExtendedRational>> {
    let mut out = Vec::new();
    if let Some(r) = ledger.first().and_then(|e| e.before.get(name)) {
        out.push(*r);
    }
    for e in ledger.iter().filter(|e| e.operation.contains("twist")) {
        if let Some(r) = e.after.get(name) {
            out.push(*r);
        }
    }
    out
}
