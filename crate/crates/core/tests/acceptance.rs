//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (run with `--nocapture` to see them all).

use pauliprobe_core::bounds::{
    f_w, game_floor, lower_bound_n, run_game, stirling_brackets, upper_bound_n,
    weighted_sum_max_eigenvalue, BoundQuery, GameConfig, Strategy,
};
use pauliprobe_core::channel::PauliChannel;
use pauliprobe_core::cover::{
    cn_upper_bound, covering_power_formula, greedy_cover, syndrome_distribution,
    verify_covering, weight_class_size, GreedyMode, UniformFamily,
};
use pauliprobe_core::oracle;
use pauliprobe_core::pauli::{
    binomial, enumerate_paulis_of_weight, walsh_hadamard_in_place, PauliString, Transform,
};
use pauliprobe_core::probe::{
    bell_outcome_distribution, estimate_all_eigenvalues, plan_samples, sample_outcomes,
    AlphaProbe, ProbeSpec,
};
use pauliprobe_core::seed::stream_rng;
use rand::Rng;

fn report(id: u32, name: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("acceptance {id:2} [{verdict}] {name}: {detail}");
    assert!(pass, "criterion {id} failed: {detail}");
}

/// Naive transform straight from the double-sum definition; the
/// independent oracle for criterion 1.
fn walsh_hadamard_naive(f: &[f64]) -> Vec<f64> {
    let n = (f.len() as f64).log(4.0).round() as usize;
    let mut out = vec![0.0; f.len()];
    for (b_idx, slot) in out.iter_mut().enumerate() {
        let b = PauliString::new(n, b_idx as u64).unwrap();
        let mut acc = 0.0;
        for (a_idx, &v) in f.iter().enumerate() {
            let a = PauliString::new(n, a_idx as u64).unwrap();
            if a.symplectic_inner(&b).unwrap() == 1 {
                acc -= v;
            } else {
                acc += v;
            }
        }
        *slot = acc;
    }
    out
}

#[test]
fn criterion_01_transform_correctness() {
    let mut worst: f64 = 0.0;
    let mut rng = stream_rng(0xACC1, 0);

    // Fast equals naive on a full (randomly scaled) basis for n <= 3,
    // which pins the linear map everywhere, plus random dense inputs.
    for n in 1..=3usize {
        let len = 1usize << (2 * n);
        for i in 0..len {
            let mut f = vec![0.0; len];
            f[i] = rng.gen_range(0.5..2.0);
            let expect = walsh_hadamard_naive(&f);
            walsh_hadamard_in_place(&mut f, Transform::Forward).unwrap();
            for (a, b) in f.iter().zip(&expect) {
                worst = worst.max((a - b).abs());
            }
        }
        for _ in 0..5 {
            let mut f: Vec<f64> = (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let expect = walsh_hadamard_naive(&f);
            walsh_hadamard_in_place(&mut f, Transform::Forward).unwrap();
            for (a, b) in f.iter().zip(&expect) {
                worst = worst.max((a - b).abs());
            }
        }
    }

    // Roundtrip identity for n <= 6.
    let mut worst_rt: f64 = 0.0;
    for n in 1..=6usize {
        let len = 1usize << (2 * n);
        let f: Vec<f64> = (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let mut g = f.clone();
        walsh_hadamard_in_place(&mut g, Transform::Forward).unwrap();
        walsh_hadamard_in_place(&mut g, Transform::Inverse).unwrap();
        for (a, b) in f.iter().zip(&g) {
            worst_rt = worst_rt.max((a - b).abs());
        }
    }

    report(
        1,
        "transform correctness",
        worst < 1e-12 && worst_rt < 1e-12,
        &format!("max |fast - naive| = {worst:.2e}, max roundtrip error = {worst_rt:.2e}"),
    );
}

#[test]
fn criterion_02_oracle_equivalence() {
    let mut worst: f64 = 0.0;

    // Bell outcome distributions, n <= 2, 20 seeds.
    for n in 1..=2usize {
        for seed in 0..20u64 {
            let ch = PauliChannel::random(n, seed).unwrap();
            let alpha = 0.05 + 0.9 * (seed as f64 / 19.0);
            let probe = ProbeSpec::Alpha(AlphaProbe::new(n, alpha).unwrap());
            let fast = bell_outcome_distribution(&ch, &probe).unwrap();
            let dense = oracle::dense_outcome_distribution(&ch, &probe).unwrap();
            for (f, d) in fast.values().iter().zip(&dense) {
                worst = worst.max((f - d).abs());
            }
        }
    }

    // Syndrome distributions, n <= 2, k in {0, 1}, 20 seeds.
    for n in 1..=2usize {
        for k in 0..=1usize.min(n) {
            let family = UniformFamily::for_task(n, k, n.min(1)).unwrap();
            let groups: Vec<_> = family.groups().take(3).collect();
            for seed in 0..20u64 {
                let ch = PauliChannel::random(n, 1000 + seed).unwrap();
                for group in &groups {
                    let fast = syndrome_distribution(group, &ch).unwrap();
                    let dense = oracle::dense_syndrome_distribution(group, &ch).unwrap();
                    for (f, d) in fast.probabilities().iter().zip(&dense) {
                        worst = worst.max((f - d).abs());
                    }
                }
            }
        }
    }

    // Entanglement entropy, n <= 3, a 20-point alpha sweep.
    for n in 1..=3usize {
        for i in 0..20 {
            let alpha = i as f64 / 19.0;
            let probe = AlphaProbe::new(n, alpha).unwrap();
            let rho = oracle::dense_probe_density(&ProbeSpec::Alpha(probe)).unwrap();
            let dense =
                oracle::dense_partial_trace_entropy(&rho, n, oracle::Keep::Ancilla).unwrap();
            worst = worst.max((dense - probe.entanglement_entropy()).abs());
        }
    }

    // Weighted-sum max eigenvalue, n <= 3, 20 x-values.
    for n in 1..=3usize {
        for i in 1..=20 {
            let x = i as f64 / 20.0;
            let dense = oracle::dense_weighted_sum_max_eigenvalue(n, x).unwrap();
            worst = worst.max((dense - weighted_sum_max_eigenvalue(n, x).unwrap()).abs());
        }
    }

    report(
        2,
        "oracle equivalence",
        worst < 1e-9,
        &format!("max |fast - dense| = {worst:.2e}"),
    );
}

#[test]
fn criterion_03_learning_guarantee_statistics() {
    let (eps, delta) = (0.1, 0.05);
    let seeds = 200u64;
    let allowed = delta + 3.0 * (delta * (1.0 - delta) / seeds as f64).sqrt();
    let mut detail = String::new();
    let mut pass = true;

    for n in [3usize, 4] {
        for &alpha in &[1.0, 0.5, 0.25] {
            let probe = ProbeSpec::Alpha(AlphaProbe::new(n, alpha).unwrap());
            let shots = plan_samples(&probe, eps, delta, n).unwrap();
            let mut failures = 0u64;
            for t in 0..seeds {
                let ch = PauliChannel::random(n, 40_000 + 97 * t + n as u64).unwrap();
                let rec = sample_outcomes(&ch, &probe, shots as usize, t).unwrap();
                let est = estimate_all_eigenvalues(&rec).unwrap();
                let max_err = est
                    .values()
                    .iter()
                    .zip(ch.eigenvalues().values())
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0f64, f64::max);
                if max_err > eps {
                    failures += 1;
                }
            }
            let rate = failures as f64 / seeds as f64;
            detail.push_str(&format!("n={n} a={alpha}: {rate:.3}; "));
            if rate > allowed {
                pass = false;
            }
        }
    }

    // alpha-scaling proxy in the small-alpha regime (n = 4, where the
    // 3^{-n} floor in E is negligible).
    let n = 4;
    let n_quarter = plan_samples(
        &ProbeSpec::Alpha(AlphaProbe::new(n, 0.25).unwrap()),
        eps,
        delta,
        n,
    )
    .unwrap();
    let n_half = plan_samples(
        &ProbeSpec::Alpha(AlphaProbe::new(n, 0.5).unwrap()),
        eps,
        delta,
        n,
    )
    .unwrap();
    let ratio = n_quarter as f64 / n_half as f64;
    detail.push_str(&format!("N(0.25)/N(0.5) = {ratio:.3}"));
    if !(3.5..=4.5).contains(&ratio) {
        pass = false;
    }

    report(
        3,
        "learning-guarantee statistical reproduction",
        pass,
        &format!("failure rates (allowed {allowed:.3}): {detail}"),
    );
}

#[test]
fn criterion_04_entanglement_endpoints_and_scaling() {
    let mut pass = true;
    let mut detail = String::new();
    for n in 1..=12usize {
        let top = AlphaProbe::new(n, 1.0).unwrap().entanglement_entropy();
        let bottom = AlphaProbe::new(n, 0.0).unwrap().entanglement_entropy();
        if top != n as f64 || bottom != 0.0 {
            pass = false;
            detail.push_str(&format!("endpoints broken at n={n}; "));
        }
    }

    let n = 12;
    let mut ratios = Vec::new();
    for i in 0..=5 {
        let alpha = 0.05 + 0.05 * i as f64;
        let s = AlphaProbe::new(n, alpha).unwrap().entanglement_entropy();
        let ratio = s / (n as f64 * alpha);
        ratios.push(ratio);
        if !(0.5..=2.0).contains(&ratio) {
            pass = false;
        }
    }
    detail.push_str(&format!(
        "S/(n a) at n=12 over a in [0.05,0.3]: [{:.3}, {:.3}]",
        ratios.iter().cloned().fold(f64::INFINITY, f64::min),
        ratios.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    ));

    report(4, "entanglement endpoints and scaling", pass, &detail);
}

#[test]
fn criterion_05_covering_powers() {
    let mut pass = true;
    let mut detail = String::new();

    // Low family: Sigma = C(n, w) exactly, for every group.
    for (n, w) in [(3usize, 1usize), (4, 1), (4, 2)] {
        let family = UniformFamily::for_task(n, 0, w).unwrap();
        let expect = binomial(n, w);
        let ok = family
            .groups()
            .all(|g| g.sys_weight_count(w) as u128 == expect);
        if !ok {
            pass = false;
        }
        detail.push_str(&format!("low({n},{w})={expect}{}; ", if ok { "" } else { "!" }));
    }

    // High family: measured count >= C(2(n-w), n-w) 2^{2w-n-1}.
    for (n, w) in [(2usize, 2usize), (3, 2), (4, 3), (4, 4)] {
        let family = UniformFamily::for_task(n, 0, w).unwrap();
        let bound = binomial(2 * (n - w), n - w) * (1u128 << (2 * w - n - 1));
        let measured = family.groups().next().unwrap().sys_weight_count(w) as u128;
        let ok = family
            .groups()
            .all(|g| g.sys_weight_count(w) as u128 >= bound);
        if !ok {
            pass = false;
        }
        detail.push_str(&format!("high({n},{w}): {measured}>={bound}; "));
    }

    // Ancilla low family: Sigma(w, k) equals the closed form.
    for (n, k, w) in [(2usize, 1usize, 1usize), (3, 1, 1), (3, 1, 2)] {
        let family = UniformFamily::for_task(n, k, w).unwrap();
        let expect = covering_power_formula(n, k, w);
        let ok = family
            .groups()
            .all(|g| g.sys_weight_count(w) as u128 == expect);
        if !ok {
            pass = false;
        }
        detail.push_str(&format!("anc({n},{k},{w})={expect}{}; ", if ok { "" } else { "!" }));
    }

    // Ancilla high instance respects the bound.
    let (n, k, w) = (3usize, 1usize, 3usize);
    let family = UniformFamily::for_task(n, k, w).unwrap();
    let bound = covering_power_formula(n, k, w);
    let ok = family
        .groups()
        .all(|g| g.sys_weight_count(w) as u128 >= bound);
    if !ok {
        pass = false;
    }
    detail.push_str(&format!("anc-high(3,1,3) >= {bound}"));

    report(5, "covering powers", pass, &detail);
}

#[test]
fn criterion_06_r_regularity() {
    let family = UniformFamily::for_task(2, 0, 1).unwrap();
    let groups: Vec<_> = family.groups().collect();
    let mut pass = groups.len() == 9;
    let mut counts = Vec::new();
    for s in enumerate_paulis_of_weight(2, 1).unwrap() {
        let r = groups.iter().filter(|g| g.sys_contains(&s)).count();
        counts.push(r);
        if r != 3 {
            pass = false;
        }
    }
    report(
        6,
        "R-regularity at (n,w)=(2,1)",
        pass,
        &format!("per-string group counts: {counts:?} (want all 3)"),
    );
}

#[test]
fn criterion_07_greedy_covering() {
    let mut pass = true;
    let mut detail = String::new();
    for n in 1..=4usize {
        for w in 0..=n {
            let family = UniformFamily::for_task(n, 0, w).unwrap();
            let covering = greedy_cover(&family, 2024, GreedyMode::FirstFit).unwrap();
            let coverage = verify_covering(&covering).unwrap().covered_fraction;
            let bound = if w == 0 {
                1
            } else {
                cn_upper_bound(weight_class_size(n, w), family.sigma())
            };
            let size = covering.groups.len() as u64;
            if coverage != 1.0 || size > bound {
                pass = false;
                detail.push_str(&format!("({n},{w}): cov={coverage} size={size}>{bound}! "));
            }
            if (n, w) == (3, 1) || (n, w) == (4, 2) {
                detail.push_str(&format!("({n},{w}): |C|={size}<=bound {bound}; "));
            }
        }
    }
    report(7, "greedy covering", pass, &detail);
}

#[test]
fn criterion_08_bound_identities() {
    let mut pass = true;
    let mut detail = String::new();

    // f_w(n, n, 1) = 2^n exactly for n <= 60.
    for n in 1..=60usize {
        if f_w(n, n, 1.0).unwrap() != 2f64.powi(n as i32) {
            pass = false;
            detail.push_str(&format!("f_w({n},{n},1) != 2^{n}; "));
        }
    }

    // Exact halving per ancilla qubit.
    for k in 0..8usize {
        let a = lower_bound_n(&BoundQuery::new(8, k, 5, 0.1, 0.05).unwrap()).unwrap();
        let b = lower_bound_n(&BoundQuery::new(8, k + 1, 5, 0.1, 0.05).unwrap()).unwrap();
        if a != 2.0 * b {
            pass = false;
            detail.push_str(&format!("halving broken at k={k}; "));
        }
    }

    // Stirling brackets for all 2 <= n <= 60.
    for n in 2..=60usize {
        for u in 1..n {
            let (lo, hi) = stirling_brackets(n, u).unwrap();
            let exact = binomial(n, u) as f64;
            if !(lo <= exact && exact <= hi) {
                pass = false;
                detail.push_str(&format!("bracket broken at ({n},{u}); "));
            }
        }
    }

    // upper >= lower on the full grid n <= 12.
    let mut checked = 0usize;
    for n in 1..=12usize {
        for k in 0..=n {
            for w in 1..=n {
                let q = BoundQuery::new(n, k, w, 0.1, 0.05).unwrap();
                let lo = lower_bound_n(&q).unwrap();
                let hi = upper_bound_n(&q, None).unwrap();
                checked += 1;
                if hi < lo {
                    pass = false;
                    detail.push_str(&format!("upper<lower at ({n},{k},{w}); "));
                }
            }
        }
    }
    detail.push_str(&format!("grid points checked: {checked}"));

    report(8, "bound identities", pass, &detail);
}

#[test]
fn criterion_09_full_weight_lower_bound_constant() {
    let (eps, delta) = (0.1, 0.05);
    let q = BoundQuery::new(8, 0, 8, eps, delta).unwrap();
    let lower = lower_bound_n(&q).unwrap();
    let expect = (1.0 - 2.0 * delta) / (4.0 * eps * eps) * 2f64.powi(8);
    let pass = lower == expect && (lower - 5760.0).abs() < 1e-9;
    report(
        9,
        "w=n lower-bound constant",
        pass,
        &format!("lower_bound_N(8,0,8) = {lower} (expect {expect} = 5760)"),
    );
}

#[test]
fn criterion_10_game_floor() {
    let cfg = GameConfig {
        n: 2,
        w: 2,
        x: 1.0,
        eps: 0.1,
        delta: 0.05,
        trials: 200,
        seed: 424242,
    };
    let result = run_game(&cfg, &Strategy::AlphaProbe(1.0)).unwrap();
    let floor = game_floor(&cfg).unwrap();
    let sigma = result.sigma_wilson();
    let pass = result.win_rate >= floor - 5.0 * sigma;
    report(
        10,
        "game floor",
        pass,
        &format!(
            "win rate {:.3} vs floor {floor:.3} - 5 sigma ({sigma:.4})",
            result.win_rate
        ),
    );
}
