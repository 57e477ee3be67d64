//! The orchestrated verification harness behind `tautilt verify`: every
//! count formula is checked against brute-force enumeration on a desk-scale
//! range, every redundant evaluation route is compared, and the golden
//! tables and spectral closed forms are reproduced.
//!
//! Engine-only checks always run. Enumeration-backed checks clamp their
//! ranges to the configured maxima, so a zero range turns them into a
//! vacuous pass.

use crate::golden;
use crate::table;
use num_bigint::BigUint;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use tautilt_core::{algebra::Shape, oracle, spectral, AlgebraSpec, CountEngine, Family, Indec};

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub n_max_lin: usize,
    pub r_max_lin: u32,
    pub n_max_cyc: usize,
    pub r_max_cyc: u32,
    pub tol: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { n_max_lin: 8, r_max_lin: 6, n_max_cyc: 8, r_max_cyc: 5, tol: 1e-8 }
    }
}

#[derive(Debug)]
pub struct GroupResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type GroupFn = fn(&CountEngine, &VerifyConfig) -> Result<String, String>;

/// Runs every verification group; never panics on a mismatch, the first
/// counterexample is reported in the group detail instead.
pub fn run(engine: &CountEngine, cfg: &VerifyConfig) -> Vec<GroupResult> {
    let groups: Vec<(&'static str, GroupFn)> = vec![
        ("golden-tables", golden_tables),
        ("oracle-engine", oracle_engine),
        ("np-bijection", np_bijection),
        ("first-projective", first_projective),
        ("avoidance-split", avoidance_split),
        ("proper-support-formulas", proper_support_formulas),
        ("sincere-prefix-filter", sincere_prefix_filter),
        ("restricted-support-sets", restricted_support_sets),
        ("cyclic-prefix-sets", cyclic_prefix_sets),
        ("two-route-agreement", two_route_agreement),
        ("catalan-diagonal", catalan_diagonal),
        ("lucas", lucas_closed_form),
        ("spectral", spectral_checks),
        ("mixed-kupisch-example", mixed_kupisch_example),
    ];
    groups
        .into_iter()
        .map(|(name, check)| match check(engine, cfg) {
            Ok(detail) => GroupResult { name, passed: true, detail },
            Err(detail) => GroupResult { name, passed: false, detail },
        })
        .collect()
}

/// A deterministic admissible Kupisch series with at most `max_n` vertices.
pub fn random_kupisch(rng: &mut ChaCha8Rng, max_n: usize) -> Vec<u32> {
    let n = rng.gen_range(1..=max_n.max(1));
    let mut c = vec![1u32; n];
    for j in (0..n - 1).rev() {
        c[j] = rng.gen_range(1..=c[j + 1] + 1);
    }
    c
}

fn seeded_rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x7a_75_74_69)
}

fn big(v: usize) -> BigUint {
    BigUint::from(v)
}

fn uniform(shape: Shape, n: usize, r: u32) -> AlgebraSpec {
    AlgebraSpec::uniform(shape, n, r).expect("r >= 1")
}

/// Linear sample: uniform algebras up to the clamp, plus deterministic
/// random series.
fn linear_sample(cfg: &VerifyConfig, n_cap: usize, r_cap: u32, extra: usize) -> Vec<AlgebraSpec> {
    let n_max = cfg.n_max_lin.min(n_cap);
    let r_max = cfg.r_max_lin.min(r_cap);
    let mut sample = Vec::new();
    for r in 1..=r_max {
        for n in 1..=n_max {
            sample.push(uniform(Shape::Linear, n, r));
        }
    }
    if n_max >= 4 {
        sample.push(AlgebraSpec::linear(vec![2, 3, 2, 1]).unwrap());
    }
    let mut rng = seeded_rng();
    for _ in 0..extra {
        if n_max == 0 {
            break;
        }
        sample.push(AlgebraSpec::linear(random_kupisch(&mut rng, n_max)).unwrap());
    }
    sample
}

fn golden_tables(engine: &CountEngine, _cfg: &VerifyConfig) -> Result<String, String> {
    let mut cells = 0usize;
    for family in [Family::TLin, Family::SLin, Family::TCyc, Family::SCyc] {
        let golden = golden::table_for(family).unwrap();
        let values = table::table_values(engine, family, golden::R_MAX as u32, golden::N_MAX as i64)
            .map_err(|e| e.to_string())?;
        for (r, row) in values.iter().enumerate() {
            for (n, value) in row.iter().enumerate() {
                let want = BigUint::from(golden[r][n]);
                if *value != want {
                    return Err(format!(
                        "{family} at r={}, n={}: engine {value}, golden {want}",
                        r + 1,
                        n + 1
                    ));
                }
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} cells reproduced"))
}

fn oracle_engine(engine: &CountEngine, cfg: &VerifyConfig) -> Result<String, String> {
    let mut checked = 0usize;
    for r in 1..=cfg.r_max_lin {
        for n in 1..=cfg.n_max_lin {
            let a = uniform(Shape::Linear, n, r);
            let tau = oracle::enumerate_tau_tilting(&a).len();
            let support = oracle::enumerate_support_tau_tilting(&a).len();
            if big(tau) != engine.t_lin(r, n as i64) {
                return Err(format!("t mismatch on {a}: enumerated {tau}"));
            }
            let s = engine.s_lin(r, n as i64).map_err(|e| e.to_string())?;
            if big(support) != s {
                return Err(format!("s mismatch on {a}: enumerated {support}, engine {s}"));
            }
            checked += 1;
        }
    }
    for r in 1..=cfg.r_max_cyc {
        for n in 1..=cfg.n_max_cyc {
            let a = uniform(Shape::Cyclic, n, r);
            let tau = oracle::enumerate_tau_tilting(&a).len();
            let support = oracle::enumerate_support_tau_tilting(&a).len();
            let t = engine.t_cyc(r, n as i64).map_err(|e| e.to_string())?;
            if big(tau) != t {
                return Err(format!("t mismatch on {a}: enumerated {tau}, engine {t}"));
            }
            let s = engine.s_cyc(r, n as i64).map_err(|e| e.to_string())?;
            if big(support) != s {
                return Err(format!("s mismatch on {a}: enumerated {support}, engine {s}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} algebras enumerated"))
}

fn np_bijection(_engine: &CountEngine, cfg: &VerifyConfig) -> Result<String, String> {
    let mut checked = 0usize;
    let mut algebras = Vec::new();
    for r in 1..=cfg.r_max_lin {
        for n in 1..=cfg.n_max_lin {
            algebras.push(uniform(Shape::Linear, n, r));
        }
    }
    for r in 1..=cfg.r_max_cyc {
        for n in 1..=cfg.n_max_cyc {
            algebras.push(uniform(Shape::Cyclic, n, r));
        }
    }
    for a in algebras {
        let tau = oracle::enumerate_tau_tilting(&a).len();
        let pairs = oracle::enumerate_support_tau_tilting(&a);
        let (proper, proper_np) = oracle::filter_proper_np(&a, &pairs);
        if proper_np.len() != tau {
            return Err(format!("{a}: tau-tilting {tau}, nonprojective proper {}", proper_np.len()));
        }
        if pairs.len() != tau + proper.len() {
            return Err(format!("{a}: support {} != tau {tau} + proper {}", pairs.len(), proper.len()));
        }
        checked += 1;
    }
    Ok(format!("{checked} algebras checked"))
}

fn first_projective(_engine: &CountEngine, cfg: &VerifyConfig) -> Result<String, String> {
    let mut modules = 0usize;
    for a in linear_sample(cfg, cfg.n_max_lin, cfg.r_max_lin, 50) {
        let p1 = Indec::new(1, a.loewy_length(1));
        for module in oracle::enumerate_tau_tilting(&a) {
            if !module.contains(p1) {
                return Err(format!("{a}: {module} misses the first projective"));
            }
            modules += 1;
        }
    }
    Ok(format!("{modules} tau-tilting modules all contain the first projective"))
}

fn zero_linear() -> AlgebraSpec {
    uniform(Shape::Linear, 0, 1)
}

/// Sub-algebra on a contiguous surviving range, as an `AlgebraSpec`.
fn single_component(a: &AlgebraSpec, killed: &BTreeSet<u32>) -> AlgebraSpec {
    let mut components = a.quotient_kill(killed).components;
    assert!(components.len() <= 1);
    components.pop().map(|c| c.algebra).unwrap_or_else(zero_linear)
}

fn avoidance_split(_engine: &CountEngine, cfg: &VerifyConfig) -> Result<String, String> {
    let mut checked = 0usize;
    for a in linear_sample(cfg, 6, 4, 20) {
        let n = a.n() as u32;
        let pairs = oracle::enumerate_support_tau_tilting(&a);
        let (proper, _) = oracle::filter_proper_np(&a, &pairs);
        let mut total = 0usize;
        for i in 1..=n {
            let w = oracle::filter_w(&a, i).len();
            let left = single_component(&a, &(i..=n).collect());
            let right = single_component(&a, &(1..=i).collect());
            let product = oracle::enumerate_tau_tilting(&left).len()
                * oracle::enumerate_support_tau_tilting(&right).len();
            if w != product {
                return Err(format!("{a}, i={i}: class size {w}, split product {product}"));
            }
            total += w;
        }
        if total != proper.len() {
            return Err(format!("{a}: classes sum to {total}, proper support {}", proper.len()));
        }
        checked += 1;
    }
    Ok(format!("{checked} algebras split cleanly"))
}

fn proper_support_formulas(engine: &CountEngine, cfg: &VerifyConfig) -> Result<String, String> {
    // engine against oracle on small algebras
    for a in linear_sample(cfg, 6, 4, 20) {
        let tau = big(oracle::enumerate_tau_tilting(&a).len());
        let pairs = oracle::enumerate_support_tau_tilting(&a);
        let (proper, _) = oracle::filter_proper_np(&a, &pairs);
        let t = engine.tau_count_general(&a).map_err(|e| e.to_string())?;
        let s = engine.stau_count_general(&a).map_err(|e| e.to_string())?;
        let ps = engine.ps_count_general(&a).map_err(|e| e.to_string())?;
        if t != tau || s != big(pairs.len()) || ps != big(proper.len()) {
            return Err(format!(
                "{a}: engine (t={t}, s={s}, ps={ps}) vs oracle ({}, {}, {})",
                tau,
                pairs.len(),
                proper.len()
            ));
        }
    }
    // the two split orders are asserted inside the engine; drive them on a
    // wider deterministic random sample
    let mut rng = seeded_rng();
    for _ in 0..200 {
        let a = AlgebraSpec::linear(random_kupisch(&mut rng, 10)).unwrap();
        engine.stau_count_general(&a).map_err(|e| format!("{a}: {e}"))?;
    }
    Ok("oracle comparison plus 200 random series".into())
}

fn sincere_prefix_filter(engine: &CountEngine, cfg: &VerifyConfig) -> Result<String, String> {
    let mut checked = 0usize;
    for a in linear_sample(cfg, 6, 4, 20) {
        let tau = oracle::enumerate_tau_tilting(&a).len();
        for ell in 1..=a.n() {
            let filtered = oracle::filter_v(&a, ell as u32).len();
            let formula = engine.v_count(&a, ell).map_err(|e| e.to_string())?;
            if big(filtered) != formula {
                return Err(format!("{a}, ell={ell}: filtered {filtered}, formula {formula}"));
            }
            checked += 1;
        }
        if a.n() >= 1 && oracle::filter_v(&a, a.n() as u32).len() != tau {
            return Err(format!("{a}: sincere modules differ from tau-tilting ones"));
        }
    }
    Ok(format!("{checked} filter instances match the formula"))
}

fn restricted_support_sets(engine: &CountEngine, cfg: &VerifyConfig) -> Result<String, String> {
    let n_max = cfg.n_max_lin.min(7);
    let r_max = cfg.r_max_lin.min(4);
    let mut checked = 0usize;
    for r in 1..=r_max {
        for n in 0..=n_max {
            let x = oracle::set_x(n, r).len();
            if big(x) != engine.x_count(r, n) {
                return Err(format!("X at r={r}, n={n}: {x} vs {}", engine.x_count(r, n)));
            }
            if engine.x_count(r, n) != engine.t_lin(r, n as i64 + 1) {
                return Err(format!("x_count is not the shifted t count at r={r}, n={n}"));
            }
            for ell in 0..=n {
                let y = oracle::set_y(n, r, ell).len();
                let formula = engine.y_count(r, n, ell);
                if big(y) != formula {
                    return Err(format!("Y at r={r}, n={n}, ell={ell}: {y} vs {formula}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} restricted-set cardinalities match"))
}

fn cyclic_prefix_sets(engine: &CountEngine, cfg: &VerifyConfig) -> Result<String, String> {
    let n_max = cfg.n_max_cyc.min(7);
    let r_max = cfg.r_max_cyc.min(4);
    let mut checked = 0usize;
    for r in 1..=r_max {
        for n in 1..=n_max {
            let mut total = 0usize;
            for ell in 0..n {
                let k = oracle::set_k(n, r, ell).len();
                let formula = engine.k_count(r, n, ell).map_err(|e| e.to_string())?;
                if big(k) != formula {
                    return Err(format!("K at r={r}, n={n}, ell={ell}: {k} vs {formula}"));
                }
                total += k;
                checked += 1;
            }
            let ps = engine.ps_cyc(r, n as i64).map_err(|e| e.to_string())?;
            if big(total) != ps {
                return Err(format!("sum of K classes at r={r}, n={n}: {total} vs {ps}"));
            }
        }
    }
    Ok(format!("{checked} cyclic class cardinalities match"))
}

fn two_route_agreement(engine: &CountEngine, _cfg: &VerifyConfig) -> Result<String, String> {
    let n_max = 30i64;
    for r in 1..=6u32 {
        // cyclic tau counts: weighted convolution vs the order-r recurrence
        for n in r as i64 + 1..=n_max {
            let direct = engine.t_cyc(r, n).map_err(|e| e.to_string())?;
            let mut rec = BigUint::from(0u32);
            for i in 1..=r as i64 {
                rec += engine.catalan(i as usize - 1)
                    * engine.t_cyc(r, n - i).map_err(|e| e.to_string())?;
            }
            if rec != direct {
                return Err(format!("t_cyc routes at r={r}, n={n}: {direct} vs {rec}"));
            }
        }
        // linear support counts: order-r recurrence vs convolution
        for n in 0..=n_max {
            let s = engine.s_lin(r, n).map_err(|e| e.to_string())?;
            let mut conv = engine.t_lin(r, n);
            for i in 1..=n {
                conv += engine.t_lin(r, i - 1) * engine.s_lin(r, n - i).map_err(|e| e.to_string())?;
            }
            if conv != s {
                return Err(format!("s_lin routes at r={r}, n={n}: {s} vs {conv}"));
            }
        }
        // cyclic support counts: proper + tau vs the order-r recurrence
        for n in 1..=n_max {
            let s = engine.s_cyc(r, n).map_err(|e| e.to_string())?;
            let sum = engine.ps_cyc(r, n).map_err(|e| e.to_string())?
                + engine.t_cyc(r, n).map_err(|e| e.to_string())?;
            if sum != s {
                return Err(format!("s_cyc decomposition at r={r}, n={n}: {s} vs {sum}"));
            }
            if n > r as i64 {
                let mut rec = BigUint::from(2u32) * engine.s_cyc(r, n - 1).map_err(|e| e.to_string())?;
                for i in 2..=r as i64 {
                    rec += engine.catalan(i as usize - 1)
                        * engine.s_cyc(r, n - i).map_err(|e| e.to_string())?;
                }
                if rec != s {
                    return Err(format!("s_cyc routes at r={r}, n={n}: {s} vs {rec}"));
                }
            }
        }
    }
    // the two split orders on random series, asserted inside the engine
    let mut rng = seeded_rng();
    for _ in 0..200 {
        let a = AlgebraSpec::linear(random_kupisch(&mut rng, 10)).unwrap();
        let s = engine.stau_count_general(&a).map_err(|e| format!("{a}: {e}"))?;
        let ps = engine.ps_count_general(&a).map_err(|e| format!("{a}: {e}"))?;
        let t = engine.tau_count_general(&a).map_err(|e| format!("{a}: {e}"))?;
        if ps.clone() + t != s {
            return Err(format!("{a}: s does not split as ps + t"));
        }
    }
    Ok("all redundant routes agree up to n = 30".into())
}

fn catalan_diagonal(engine: &CountEngine, _cfg: &VerifyConfig) -> Result<String, String> {
    for n in 0..=14i64 {
        for r in (n.max(1) as u32)..=15 {
            if engine.t_lin(r, n) != engine.catalan(n as usize) {
                return Err(format!("t diagonal at r={r}, n={n}"));
            }
            let s = engine.s_lin(r, n).map_err(|e| e.to_string())?;
            if s != engine.catalan(n as usize + 1) {
                return Err(format!("s diagonal at r={r}, n={n}"));
            }
        }
    }
    // the convolution identity the diagonal rests on
    for n in 1..=20usize {
        let conv: BigUint = (1..=n).map(|i| engine.catalan(i - 1) * engine.catalan(n - i)).sum();
        if conv != engine.catalan(n) {
            return Err(format!("catalan convolution at n={n}"));
        }
    }
    Ok("hereditary diagonals are Catalan up to n = 14".into())
}

fn lucas_closed_form(engine: &CountEngine, cfg: &VerifyConfig) -> Result<String, String> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let psi = (1.0 - 5f64.sqrt()) / 2.0;
    for n in 1..=30usize {
        let lucas = engine.lucas(n);
        let t = engine.t_cyc(2, n as i64).map_err(|e| e.to_string())?;
        if lucas != t {
            return Err(format!("lucas({n}) = {lucas}, t_cyc(2,{n}) = {t}"));
        }
        let float = phi.powi(n as i32) + psi.powi(n as i32);
        let exact: f64 = lucas.to_string().parse().unwrap();
        if (float.round() - exact).abs() > 0.0 {
            return Err(format!("rounded closed form at n={n}: {float} vs {exact}"));
        }
        if (float - exact).abs() / exact.max(1.0) > cfg.tol.max(1e-8) {
            return Err(format!("float closed form at n={n}: {float} vs {exact}"));
        }
    }
    Ok("golden-ratio closed form holds up to n = 30".into())
}

fn spectral_checks(engine: &CountEngine, cfg: &VerifyConfig) -> Result<String, String> {
    let tol = cfg.tol;
    let mut skipped = Vec::new();
    for r in 1..=6u32 {
        spectral::power_sum_check(engine, r, 20, tol).map_err(|e| e.to_string())?;
        match spectral::homog_check(engine, r, 20, tol).map_err(|e| e.to_string())? {
            spectral::HomogOutcome::Ran(_) => {}
            spectral::HomogOutcome::Skipped { min_gap } => skipped.push((r, min_gap)),
        }
    }
    for r in 1..=8u32 {
        let p = spectral::char_poly(engine, r).map_err(|e| e.to_string())?;
        let roots = spectral::find_roots(&p, 1e-12).map_err(|e| e.to_string())?;
        let err = spectral::reconstruction_error(&p, &roots);
        if err > 1e-8 {
            return Err(format!("coefficient reconstruction at r={r}: rel err {err:e}"));
        }
    }
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let growth = spectral::dominant_growth(engine, 2).map_err(|e| e.to_string())?;
    if (growth - phi).abs() > 1e-10 {
        return Err(format!("dominant growth at r=2: {growth} vs {phi}"));
    }
    if skipped.is_empty() {
        Ok("power sums, homogeneous sums, and reconstruction within tolerance".into())
    } else {
        Ok(format!(
            "power sums and reconstruction within tolerance; homogeneous check skipped for {skipped:?} (repeated roots)"
        ))
    }
}

fn mixed_kupisch_example(engine: &CountEngine, cfg: &VerifyConfig) -> Result<String, String> {
    let a = AlgebraSpec::linear(vec![2, 3, 2, 1]).unwrap();
    let t = engine.tau_count_general(&a).map_err(|e| e.to_string())?;
    let ps = engine.ps_count_general(&a).map_err(|e| e.to_string())?;
    let s = engine.stau_count_general(&a).map_err(|e| e.to_string())?;
    if (t.clone(), ps.clone(), s.clone()) != (big(7), big(26), big(33)) {
        return Err(format!("engine counts (t={t}, ps={ps}, s={s}), expected (7, 26, 33)"));
    }
    // per-vertex sub-table: tau/support counts of both sides of each split
    let expected: [[usize; 4]; 4] = [
        [1, 14, 1, 5], // i = 1: tau(left), s(right), s(left), tau(right)
        [1, 5, 2, 2],
        [2, 2, 5, 1],
        [3, 1, 12, 1],
    ];
    let n = a.n() as u32;
    for (i, want) in (1..=n).zip(expected) {
        let left = single_component(&a, &(i..=n).collect());
        let right = single_component(&a, &(1..=i).collect());
        let got_engine = [
            engine.tau_count_general(&left).map_err(|e| e.to_string())?,
            engine.stau_count_general(&right).map_err(|e| e.to_string())?,
            engine.stau_count_general(&left).map_err(|e| e.to_string())?,
            engine.tau_count_general(&right).map_err(|e| e.to_string())?,
        ];
        if got_engine != want.map(big) {
            return Err(format!("engine sub-table at i={i}: {got_engine:?}, expected {want:?}"));
        }
    }
    if cfg.n_max_lin >= 4 {
        let tau = oracle::enumerate_tau_tilting(&a).len();
        let pairs = oracle::enumerate_support_tau_tilting(&a);
        let (proper, _) = oracle::filter_proper_np(&a, &pairs);
        if (tau, proper.len(), pairs.len()) != (7, 26, 33) {
            return Err(format!(
                "oracle counts ({tau}, {}, {}), expected (7, 26, 33)",
                proper.len(),
                pairs.len()
            ));
        }
        for (i, want) in (1..=n).zip(expected) {
            let left = single_component(&a, &(i..=n).collect());
            let right = single_component(&a, &(1..=i).collect());
            let got = [
                oracle::enumerate_tau_tilting(&left).len(),
                oracle::enumerate_support_tau_tilting(&right).len(),
                oracle::enumerate_support_tau_tilting(&left).len(),
                oracle::enumerate_tau_tilting(&right).len(),
            ];
            if got != want {
                return Err(format!("oracle sub-table at i={i}: {got:?}, expected {want:?}"));
            }
        }
    }
    Ok("the [2,3,2,1] example reproduces (7, 26, 33) and its sub-table".into())
}
