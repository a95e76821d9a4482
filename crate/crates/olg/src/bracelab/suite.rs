//! Randomized exact checks of the brace identities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;

use super::cochain::Cochain;
use super::ops::Lab;
use super::scalar::Z12;

pub const DEFAULT_SEED: u64 = 20_240_917;

fn sign(exp: i64) -> Z12 {
    if exp.rem_euclid(2) == 0 {
        Z12::ONE
    } else {
        Z12::int(-1)
    }
}

/// One homogeneous input cochain: arity, sector and value.
#[derive(Clone, Debug)]
pub struct Input {
    pub arity: usize,
    pub sector: usize,
    pub value: Cochain,
}

impl Input {
    fn random<R: Rng>(lab: &Lab, arity: usize, rng: &mut R) -> Input {
        let sector = rng.gen_range(0..lab.group_order());
        Input { arity, sector, value: lab.random(arity, sector, rng) }
    }
}

/// Right-hand side of the twisted higher pre-Jacobi identity for
/// `φ{φ_1..φ_n}{ψ_1..ψ_m}`: a sum over order-preserving ways of nesting
/// consecutive blocks of the `ψ_j` into the `φ_i`, where `ψ`s inside `φ_i`
/// are acted on by `(g_{i−1}⋯g_1)^*` and `ψ`s placed after `φ_i` at top
/// level by `(g_i⋯g_1)^*`, with sign `Σ_i (|φ_i|−1) Σ_{l<j_i} (|ψ_l|−1)`.
pub fn pre_jacobi_rhs(lab: &Lab, phi: &Cochain, phis: &[Input], psis: &[Input]) -> Cochain {
    let grp = lab.algebra().group();
    let n = phis.len();
    let m = psis.len();
    let mut prefix = vec![0usize];
    for (i, f) in phis.iter().enumerate() {
        prefix.push(grp.mul(f.sector, prefix[i]));
    }
    let acted: Vec<Vec<Cochain>> = (0..=n).map(|i| psis.iter().map(|p| lab.act(prefix[i], &p.value)).collect()).collect();
    let mut out = Cochain::zero(lab.dim());
    // starts[i], lens[i]: the ψ block nested into φ_i.
    fn rec(i: usize, from: usize, n: usize, m: usize, starts: &mut Vec<usize>, lens: &mut Vec<usize>, f: &mut dyn FnMut(&[usize], &[usize])) {
        if i == n {
            f(starts, lens);
            return;
        }
        for s in from..=m {
            for l in 0..=(m - s) {
                starts.push(s);
                lens.push(l);
                rec(i + 1, s + l, n, m, starts, lens, f);
                starts.pop();
                lens.pop();
            }
        }
    }
    rec(0, 0, n, m, &mut Vec::new(), &mut Vec::new(), &mut |starts, lens| {
        let mut exp = 0i64;
        let mut top: Vec<Cochain> = Vec::new();
        let mut next = 0;
        for i in 0..n {
            exp += (phis[i].arity as i64 - 1) * psis[..starts[i]].iter().map(|p| p.arity as i64 - 1).sum::<i64>();
            for l in next..starts[i] {
                top.push(acted[i][l].clone());
            }
            let inner: Vec<&Cochain> = (starts[i]..starts[i] + lens[i]).map(|l| &acted[i][l]).collect();
            top.push(lab.brace(&phis[i].value, &inner));
            next = starts[i] + lens[i];
        }
        for l in next..m {
            top.push(acted[n][l].clone());
        }
        let refs: Vec<&Cochain> = top.iter().collect();
        out = out.add_scaled(&lab.brace(phi, &refs), sign(exp));
    });
    out
}

/// Outcome of one identity over all samples.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityResult {
    pub name: String,
    pub samples: usize,
    pub passed: usize,
    /// First failing sample index and the support size of the defect.
    pub witness: Option<String>,
}

impl IdentityResult {
    pub fn ok(&self) -> bool {
        self.passed == self.samples
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub algebra: String,
    pub group_order: usize,
    pub seed: u64,
    pub results: Vec<IdentityResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(IdentityResult::ok)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub samples: usize,
    pub seed: u64,
    /// Largest arity of randomly drawn cochains.
    pub max_arity: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { samples: 100, seed: DEFAULT_SEED, max_arity: 2 }
    }
}

/// A named identity: builds `(lhs, rhs)` from a seeded generator.
type Check = fn(&Lab, &Lab, usize, &mut ChaCha8Rng) -> Result<(Cochain, Cochain)>;

fn arity<R: Rng>(rng: &mut R, lo: usize, hi: usize) -> usize {
    rng.gen_range(lo..=hi.max(lo))
}

fn pre_jacobi(lab: &Lab, n: usize, m: usize, max: usize, rng: &mut ChaCha8Rng) -> (Cochain, Cochain) {
    let top = Input::random(lab, arity(rng, n, max), rng);
    let phis: Vec<Input> = (0..n).map(|_| Input::random(lab, arity(rng, 0, max), rng)).collect();
    let psis: Vec<Input> = (0..m).map(|_| Input::random(lab, arity(rng, 0, max), rng)).collect();
    let inner: Vec<&Cochain> = phis.iter().map(|p| &p.value).collect();
    let outer: Vec<&Cochain> = psis.iter().map(|p| &p.value).collect();
    let lhs = lab.brace(&lab.brace(&top.value, &inner), &outer);
    (lhs, pre_jacobi_rhs(lab, &top.value, &phis, &psis))
}

fn check_pre_jacobi_11(lab: &Lab, _: &Lab, max: usize, rng: &mut ChaCha8Rng) -> Result<(Cochain, Cochain)> {
    Ok(pre_jacobi(lab, 1, 1, max, rng))
}
fn check_pre_jacobi_12(lab: &Lab, _: &Lab, max: usize, rng: &mut ChaCha8Rng) -> Result<(Cochain, Cochain)> {
    Ok(pre_jacobi(lab, 1, 2, max, rng))
}
fn check_pre_jacobi_21(lab: &Lab, _: &Lab, max: usize, rng: &mut ChaCha8Rng) -> Result<(Cochain, Cochain)> {
    Ok(pre_jacobi(lab, 2, 1, max, rng))
}
fn check_pre_jacobi_22(lab: &Lab, _: &Lab, max: usize, rng: &mut ChaCha8Rng) -> Result<(Cochain, Cochain)> {
    Ok(pre_jacobi(lab, 2, 2, max, rng))
}

fn check_equivariance(lab: &Lab, _: &Lab, max: usize, rng: &mut ChaCha8Rng) -> Result<(Cochain, Cochain)> {
    let phi = Input::random(lab, arity(rng, 1, max), rng).value;
    let a = Input::random(lab, arity(rng, 0, max), rng).value;
    let b = Input::random(lab, arity(rng, 0, max), rng).value;
    let h = rng.gen_range(0..lab.group_order());
    let lhs = lab.act(h, &lab.brace(&phi, &[&a, &b]));
    let rhs = lab.brace(&lab.act(h, &phi), &[&lab.act(h, &a), &lab.act(h, &b)]);
    Ok((lhs, rhs))
}

/// `(−1)^{|φ_1|}∂(φ{φ_1}) + (∂φ){φ_1} − (−1)^{|φ_1|}φ{∂φ_1} = φ_1 ∪ (g_1^{-1})^*φ − (−1)^{|φ||φ_1|} φ ∪ φ_1`.
fn check_homotopy(lab: &Lab, _: &Lab, max: usize, rng: &mut ChaCha8Rng) -> Result<(Cochain, Cochain)> {
    let phi = Input::random(lab, arity(rng, 0, max), rng);
    let phi1 = Input::random(lab, arity(rng, 0, max), rng);
    let (p, q) = (phi.arity as i64, phi1.arity as i64);
    let s1 = sign(q);
    let lhs = lab
        .hochschild_d(&lab.brace(&phi.value, &[&phi1.value]))
        .scale(s1)
        .add(&lab.brace(&lab.hochschild_d(&phi.value), &[&phi1.value]))
        .sub(&lab.brace(&phi.value, &[&lab.hochschild_d(&phi1.value)]).scale(s1));
    let ginv = lab.algebra().group().inv(phi1.sector);
    let rhs = lab
        .cup(&phi1.value, &lab.act(ginv, &phi.value))
        .sub(&lab.cup(&phi.value, &phi1.value).scale(sign(p * q)));
    Ok((lhs, rhs))
}

fn leibniz(lab: &Lab, curved: bool, max: usize, rng: &mut ChaCha8Rng) -> Result<(Cochain, Cochain)> {
    let a = Input::random(lab, arity(rng, 0, max), rng);
    let b = Input::random(lab, arity(rng, 0, max), rng);
    let d = |x: &Cochain| -> Result<Cochain> {
        if curved {
            lab.total_d(x)
        } else {
            Ok(lab.hochschild_d(x))
        }
    };
    let lhs = d(&lab.cup(&a.value, &b.value))?;
    let rhs = lab.cup(&d(&a.value)?, &b.value).add(&lab.cup(&a.value, &d(&b.value)?).scale(sign(a.arity as i64)));
    Ok((lhs, rhs))
}

fn check_leibniz(lab: &Lab, _: &Lab, max: usize, rng: &mut ChaCha8Rng) -> Result<(Cochain, Cochain)> {
    leibniz(lab, false, max, rng)
}
fn check_leibniz_curved(lab: &Lab, _: &Lab, max: usize, rng: &mut ChaCha8Rng) -> Result<(Cochain, Cochain)> {
    leibniz(lab, true, max, rng)
}

fn check_d_squared(lab: &Lab, _: &Lab, max: usize, rng: &mut ChaCha8Rng) -> Result<(Cochain, Cochain)> {
    let a = Input::random(lab, arity(rng, 0, max + 1), rng).value;
    Ok((lab.hochschild_d(&lab.hochschild_d(&a)), Cochain::zero(lab.dim())))
}
fn check_curving_squared(lab: &Lab, _: &Lab, max: usize, rng: &mut ChaCha8Rng) -> Result<(Cochain, Cochain)> {
    let a = Input::random(lab, arity(rng, 0, max + 1), rng).value;
    Ok((lab.curving_d(&lab.curving_d(&a)?)?, Cochain::zero(lab.dim())))
}
fn check_total_squared(lab: &Lab, _: &Lab, max: usize, rng: &mut ChaCha8Rng) -> Result<(Cochain, Cochain)> {
    let a = Input::random(lab, arity(rng, 0, max + 1), rng).value;
    Ok((lab.total_d(&lab.total_d(&a)?)?, Cochain::zero(lab.dim())))
}

fn random_invariant(lab: &Lab, arity: usize, rng: &mut ChaCha8Rng) -> Cochain {
    let mut c = Cochain::zero(lab.dim());
    for g in 0..lab.group_order() {
        c = c.add(&lab.random(arity, g, rng));
    }
    lab.reynolds(&c)
}

fn check_psi_brace(lab: &Lab, big: &Lab, max: usize, rng: &mut ChaCha8Rng) -> Result<(Cochain, Cochain)> {
    let k = rng.gen_range(1..=2usize);
    let phi = random_invariant(lab, arity(rng, k, max), rng);
    let args: Vec<Cochain> = (0..k).map(|_| random_invariant(lab, arity(rng, 0, max), rng)).collect();
    let refs: Vec<&Cochain> = args.iter().collect();
    let psi_args: Vec<Cochain> = args.iter().map(|a| lab.psi_checked(a)).collect::<Result<_>>()?;
    let psi_refs: Vec<&Cochain> = psi_args.iter().collect();
    let lhs = big.brace(&lab.psi_checked(&phi)?, &psi_refs);
    let rhs = lab.psi(&lab.brace(&phi, &refs));
    Ok((lhs, rhs))
}

fn check_psi_chain_map(lab: &Lab, big: &Lab, max: usize, rng: &mut ChaCha8Rng) -> Result<(Cochain, Cochain)> {
    let phi = random_invariant(lab, arity(rng, 0, max), rng);
    let lhs = big.hochschild_d(&lab.psi_checked(&phi)?);
    let rhs = lab.psi(&lab.hochschild_d(&phi));
    Ok((lhs, rhs))
}

const CHECKS: &[(&str, Check, bool)] = &[
    ("curving squared", check_curving_squared, true),
    ("equivariance", check_equivariance, false),
    ("hochschild squared", check_d_squared, false),
    ("leibniz", check_leibniz, false),
    ("leibniz curved", check_leibniz_curved, true),
    ("pre-jacobi (1,1)", check_pre_jacobi_11, false),
    ("pre-jacobi (1,2)", check_pre_jacobi_12, false),
    ("pre-jacobi (2,1)", check_pre_jacobi_21, false),
    ("pre-jacobi (2,2)", check_pre_jacobi_22, false),
    ("psi brace", check_psi_brace, false),
    ("psi chain map", check_psi_chain_map, false),
    ("total squared", check_total_squared, true),
    ("twisted commutativity homotopy", check_homotopy, false),
];

/// Names of the identities [`run_suite`] checks; curved ones only run when
/// the algebra has a curving.
pub fn identity_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _, _)| *n).collect()
}

/// Runs every identity on `config.samples` seeded random inputs. Sample `s`
/// of identity `k` draws from a generator seeded with `seed + 1000·k + s`,
/// so results do not depend on the execution order.
pub fn run_suite(lab: &Lab, config: &SuiteConfig) -> Result<SuiteReport> {
    let big = lab.crossed_lab()?;
    let curved = lab.algebra().curving().is_some();
    let jobs: Vec<(usize, usize)> = CHECKS
        .iter()
        .enumerate()
        .filter(|(_, (_, _, needs_curving))| curved || !needs_curving)
        .flat_map(|(k, _)| (0..config.samples).map(move |s| (k, s)))
        .collect();
    let outcomes = crate::par::try_map(jobs, |(k, s)| -> Result<(usize, usize, Option<usize>)> {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(1000 * k as u64 + s as u64));
        let (lhs, rhs) = (CHECKS[k].1)(lab, &big, config.max_arity, &mut rng)?;
        let defect = lhs.sub(&rhs);
        Ok((k, s, (!defect.is_zero()).then(|| defect.support())))
    })?;
    let mut results = Vec::new();
    for (k, (name, _, needs_curving)) in CHECKS.iter().enumerate() {
        if *needs_curving && !curved {
            continue;
        }
        let mine: Vec<&(usize, usize, Option<usize>)> = outcomes.iter().filter(|o| o.0 == k).collect();
        let passed = mine.iter().filter(|o| o.2.is_none()).count();
        let witness = mine
            .iter()
            .find_map(|o| o.2.map(|size| format!("sample {}: defect with {size} nonzero coefficients", o.1)));
        results.push(IdentityResult { name: name.to_string(), samples: mine.len(), passed, witness });
    }
    Ok(SuiteReport { algebra: lab.algebra().name.clone(), group_order: lab.group_order(), seed: config.seed, results })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracelab::FiniteAlgebra;

    #[test]
    fn small_suite_on_group_algebra() {
        let lab = Lab::new(FiniteAlgebra::cyclic_group_algebra(2).unwrap());
        let rep = run_suite(&lab, &SuiteConfig { samples: 5, ..SuiteConfig::default() }).unwrap();
        for r in &rep.results {
            assert!(r.ok(), "{r:?}");
        }
    }

    #[test]
    fn small_suite_on_twisted_algebra() {
        let lab = Lab::new(FiniteAlgebra::truncated_polynomial(3, 3, None).unwrap());
        let rep = run_suite(&lab, &SuiteConfig { samples: 5, ..SuiteConfig::default() }).unwrap();
        for r in &rep.results {
            assert!(r.ok(), "{r:?}");
        }
    }

    #[test]
    fn dropping_the_twist_breaks_commutativity() {
        // Without (g_1^{-1})^* the homotopy identity fails for twisted inputs.
        let lab = Lab::new(FiniteAlgebra::truncated_polynomial(3, 3, None).unwrap());
        let mut failures = 0;
        for s in 0..20 {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let phi = lab.random(1, 0, &mut rng);
            let phi1 = lab.random(1, 1, &mut rng);
            let twisted = lab.cup(&phi1, &lab.act(lab.algebra().group().inv(1), &phi));
            if twisted != lab.cup(&phi1, &phi) {
                failures += 1;
            }
        }
        assert!(failures > 0);
    }

    #[test]
    fn small_suite_on_curved_algebra() {
        let lab = Lab::new(FiniteAlgebra::truncated_polynomial(4, 3, Some(3)).unwrap());
        let rep = run_suite(&lab, &SuiteConfig { samples: 5, ..SuiteConfig::default() }).unwrap();
        assert!(rep.results.iter().any(|r| r.name == "total squared"));
        for r in &rep.results {
            assert!(r.ok(), "{r:?}");
        }
    }
}
