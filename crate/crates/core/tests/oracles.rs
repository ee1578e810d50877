//! Library results against independently computed values.

use flockwall::config::{sample_initial_conditions, RunConfig};
use flockwall::observables::energy;
use flockwall::{
    diagnostics, integrate, rhs, scenarios, CommunicationKernel, ConfinementGeometry, FlockState,
    ModelSpec, WallPotential,
};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for k in 1..n {
        s += if k % 2 == 1 { 4.0 } else { 2.0 } * f(a + k as f64 * h);
    }
    s * h / 3.0
}

#[test]
fn primitive_matches_simpson_and_closed_forms() {
    let asinh_one = (1.0 + 2f64.sqrt()).ln();
    let k = CommunicationKernel::power_law(1.0, 0.5).unwrap();
    assert!((k.primitive(1.0).unwrap() - asinh_one).abs() < 1e-14);

    let k = CommunicationKernel::power_law(2.0, 1.0).unwrap();
    assert!((k.primitive(3.0).unwrap() - 2.0 * 3f64.atan()).abs() < 1e-14);

    for beta in [0.1, 0.25, 0.7, 1.6] {
        let k = CommunicationKernel::power_law(1.5, beta).unwrap();
        for d in [0.3, 1.0, 4.0, 25.0] {
            let oracle = simpson(|r| 1.5 * (1.0 + r * r).powf(-beta), 0.0, d, 20_000);
            let got = k.primitive(d).unwrap();
            assert!(
                (got - oracle).abs() <= 1e-9 * oracle,
                "beta {beta}, D {d}: {got} vs {oracle}"
            );
        }
    }
}

#[test]
fn initial_draws_follow_the_documented_stream() {
    let mut c = RunConfig::default();
    c.ic.n_agents = 1;
    c.ic.seed = 2024;
    let s = sample_initial_conditions(&c).unwrap();
    let mut rng = ChaCha20Rng::seed_from_u64(2024);
    let mut u = || (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
    let x = c.ic.x_low + (c.ic.x_high - c.ic.x_low) * u();
    let v = c.ic.v_low + (c.ic.v_high - c.ic.v_low) * u();
    assert_eq!(s.x, vec![x]);
    assert_eq!(s.v, vec![v]);
}

#[test]
fn sampled_velocities_have_the_uniform_mean() {
    let mut c = RunConfig::default();
    c.ic.n_agents = 100_000;
    c.ic.seed = 11;
    let s = sample_initial_conditions(&c).unwrap();
    let n = s.len() as f64;
    let mean = s.v.iter().sum::<f64>() / n;
    let width = c.ic.v_high - c.ic.v_low;
    let sigma = width / 12f64.sqrt() / n.sqrt();
    assert!((mean - 0.5 * (c.ic.v_low + c.ic.v_high)).abs() < 4.0 * sigma);
    assert!(s.x.windows(2).all(|w| w[0] <= w[1]));
    assert!(s.x.iter().all(|&x| x >= c.ic.x_low && x < c.ic.x_high));
}

fn walled(n: usize, geometry: ConfinementGeometry) -> ModelSpec {
    ModelSpec::new(
        CommunicationKernel::power_law(1.0, 0.25).unwrap(),
        WallPotential::new(1.0, 1.0).unwrap(),
        geometry,
        n,
    )
    .unwrap()
}

#[test]
fn energy_rate_equals_minus_enstrophy() {
    let x = vec![0.3, 0.7, 1.4, 2.0, 5.5];
    let v = vec![0.4, -1.0, 0.2, 1.3, -0.6];
    for g in [ConfinementGeometry::HalfLine, ConfinementGeometry::interval(0.0, 6.0).unwrap()] {
        let m = walled(x.len(), g);
        let s = FlockState::new(0.0, x.clone(), v.clone()).unwrap();
        let d = rhs(&m, &s).unwrap();
        let n = x.len() as f64;
        // dE/dt = (1/N) Σ v_i v_i' + (1/N) Σ U'(x_i) x_i', with U' = −F.
        let mut rate = 0.0;
        for i in 0..x.len() {
            rate += v[i] * d.dv[i] - m.force_at(x[i]).unwrap() * d.dx[i];
        }
        rate /= n;
        let mut i2 = 0.0;
        for i in 0..x.len() {
            for j in 0..x.len() {
                i2 += (1.0 + (x[i] - x[j]).powi(2)).powf(-0.25) * (v[i] - v[j]).powi(2);
            }
        }
        i2 /= 2.0 * n * n;
        assert!((rate + i2).abs() < 1e-13, "{rate} vs {i2}");
        let rec = diagnostics(&m, &s, 0.0).unwrap();
        assert!((rec.dissipation - i2).abs() < 1e-15);
    }
}

#[test]
fn momentum_rate_equals_mean_force() {
    let x = vec![0.2, 0.9, 3.0];
    let v = vec![-0.3, 0.5, 0.1];
    let m = walled(3, ConfinementGeometry::HalfLine);
    let d = rhs(&m, &FlockState::new(0.0, x.clone(), v).unwrap()).unwrap();
    let mean_force = x
        .iter()
        .map(|&y| {
            let s: f64 = 1.0 - y;
            if s > 0.0 {
                (4.0 * s.powi(3) * y + s.powi(4)) / (y * y)
            } else {
                0.0
            }
        })
        .sum::<f64>()
        / 3.0;
    assert!((d.dv.iter().sum::<f64>() / 3.0 - mean_force).abs() < 1e-13);
}

#[test]
fn free_pair_follows_the_exponential() {
    let sc = scenarios::free_pair();
    let m = sc.model().unwrap();
    let p = sc.config.plan();
    let traj = integrate(&m, &scenarios::free_pair_state(), p.t_end, &p.control, p.sample_every)
        .unwrap();
    for s in &traj.states {
        assert!(((s.v[1] - s.v[0]) - (-s.t).exp()).abs() <= 1e-6);
        // Momentum 1/2 is conserved, positions follow x₁ + x₂ = 11 + t.
        assert!((s.v[0] + s.v[1] - 1.0).abs() < 1e-12);
        assert!((s.x[0] + s.x[1] - 11.0 - s.t).abs() < 1e-9);
    }
}

#[test]
fn energy_of_a_known_state() {
    let m = walled(2, ConfinementGeometry::HalfLine);
    let s = FlockState::new(0.0, vec![0.5, 2.0], vec![1.0, -2.0]).unwrap();
    // K = (1 + 4) / 4, P = (0.5⁴ / 0.5) / 2
    assert!((energy(&m, &s).unwrap() - (1.25 + 0.0625)).abs() < 1e-15);
}
