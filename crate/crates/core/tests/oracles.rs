//! Independent oracles for the exact pipelines: reduced Burau for Δ, a
//! dense grid scan for root locations, and Rozansky's defining formula for
//! the torus Q-function.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use sigjump_core::sympoly::{isolate_roots, turn_to_x};
use sigjump_core::torus::{delta_torus, p_torus, q_torus, roots_torus, torus_pairs, TorusKnot};
use sigjump_core::{alexander, BraidWord, SymPoly};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduced Burau matrix of σ_i^{±1} (generator 1-based) on n strands.
fn burau(letter: i32, n: usize, t: &BigRational) -> Vec<Vec<BigRational>> {
    let m = n - 1;
    let i = letter.unsigned_abs() as usize - 1;
    let mut g: Vec<Vec<BigRational>> =
        (0..m).map(|r| (0..m).map(|c| if r == c { q(1) } else { q(0) }).collect()).collect();
    if letter > 0 {
        g[i][i] = -t.clone();
        if i > 0 {
            g[i][i - 1] = t.clone();
        }
        if i + 1 < m {
            g[i][i + 1] = q(1);
        }
    } else {
        g[i][i] = -(q(1) / t);
        if i > 0 {
            g[i][i - 1] = q(1);
        }
        if i + 1 < m {
            g[i][i + 1] = q(1) / t;
        }
    }
    g
}

fn matmul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).fold(q(0), |acc, k| acc + &a[i][k] * &b[k][j])).collect()).collect()
}

fn det(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut d = q(1);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else { return q(0) };
        if p != k {
            a.swap(p, k);
            d = -d;
        }
        d *= &a[k][k];
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            let (top, rest) = a.split_at_mut(i);
            for (x, y) in rest[0][k..].iter_mut().zip(&top[k][k..]) {
                *x -= &f * y;
            }
        }
    }
    d
}

/// Δ(t) up to ±t^k from det(I − β̄)·(1 − t)/(1 − tⁿ).
fn burau_delta(b: &BraidWord, t: &BigRational) -> BigRational {
    let n = b.strands();
    let mut m: Vec<Vec<BigRational>> =
        (0..n - 1).map(|r| (0..n - 1).map(|c| if r == c { q(1) } else { q(0) }).collect()).collect();
    for &l in b.letters() {
        m = matmul(&m, &burau(l, n, t));
    }
    let i_minus: Vec<Vec<BigRational>> =
        (0..n - 1).map(|r| (0..n - 1).map(|c| if r == c { q(1) } else { q(0) } - &m[r][c]).collect()).collect();
    let tn = (0..n).fold(q(1), |acc, _| acc * t);
    det(i_minus) * (q(1) - t) / (q(1) - tn)
}

fn delta_at_t(p: &SymPoly, t: &BigRational) -> BigRational {
    let x = t - q(2) + q(1) / t;
    p.eval_rational(&x)
}

/// r = ±t^k for an integer k, returned as (sign, k).
fn unit_power(r: &BigRational, t: &BigRational) -> Option<(i32, i32)> {
    let s = if r.is_negative() { -1 } else { 1 };
    let mut v = r.abs();
    let mut k = 0;
    while v > q(1) && k < 200 {
        v /= t;
        k += 1;
    }
    while v < q(1) && k > -200 {
        v *= t;
        k -= 1;
    }
    (v == q(1)).then_some((s, k))
}

fn knot_braid() -> impl Strategy<Value = BraidWord> {
    (2usize..=4, 3usize..=10)
        .prop_flat_map(|(n, len)| {
            proptest::collection::vec((1..n as i32, any::<bool>()), len)
                .prop_map(|v| v.into_iter().map(|(g, s)| if s { g } else { -g }).collect::<Vec<i32>>())
        })
        .prop_filter_map("closure must be a knot", |l| {
            let b = BraidWord::new(l).ok()?;
            (b.components() == 1).then_some(b)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn seifert_delta_matches_burau(b in knot_braid()) {
        let d = alexander(&b.seifert_matrix().unwrap()).unwrap();
        let mut seen = None;
        for t in [q(2), q(3), q(5)] {
            let ratio = burau_delta(&b, &t) / delta_at_t(&d, &t);
            let u = unit_power(&ratio, &t);
            prop_assert!(u.is_some(), "{b}: ratio {ratio} is not a unit at t = {t}");
            if let Some(prev) = seen {
                prop_assert_eq!(prev, u);
            }
            seen = Some(u);
        }
    }
}

#[test]
fn catalog_delta_matches_burau() {
    for (b, d) in [
        ("[1,1,1]", vec![1, 1]),
        ("[1,-2,1,-2]", vec![1, -1]),
        ("[-1,3,3,3,2,1,1,-3,2]", vec![1, 3]),
        ("[1,1,2,-1,2,2,2,2]", vec![1, 5, 2]),
    ] {
        let b = BraidWord::parse(b).unwrap();
        let d = SymPoly::from_i64s(&d);
        let t = q(3);
        assert!(unit_power(&(burau_delta(&b, &t) / delta_at_t(&d, &t)), &t).is_some(), "{b}");
    }
}

/// Sign changes of p(x(s)) on an N-point grid over (0, ½), as the grid
/// cells (k) with a change between s_k and s_{k+1}.
fn grid_changes(p: &SymPoly, n: usize) -> Vec<usize> {
    let s = |k: usize| (k as f64 + 0.5) / (2.0 * n as f64);
    let v: Vec<f64> = (0..n).map(|k| p.eval_f64(turn_to_x(s(k)))).collect();
    (0..n - 1).filter(|&k| v[k].signum() != v[k + 1].signum()).collect()
}

fn poly_strategy() -> impl Strategy<Value = SymPoly> {
    proptest::collection::vec(-6i64..=6, 2..=6).prop_filter_map("nonzero", |c| {
        let p = SymPoly::from_i64s(&c);
        (!p.is_zero() && p.degree() > Some(0)).then_some(p)
    })
}

const GRID: usize = 10_000;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn roots_agree_with_grid_scan(p in poly_strategy()) {
        let roots = isolate_roots(&p).unwrap();
        let turns: Vec<f64> = roots.iter().map(|r| r.turn_f64()).collect();
        let spacing = 1.0 / (2.0 * GRID as f64);
        let separated = std::iter::once(0.0)
            .chain(turns.iter().copied())
            .chain(std::iter::once(0.5))
            .collect::<Vec<_>>()
            .windows(2)
            .all(|w| w[1] - w[0] > 3.0 * spacing);
        prop_assume!(separated);
        let cells = grid_changes(&p, GRID);
        let odd: Vec<f64> = roots.iter().filter(|r| r.multiplicity() % 2 == 1).map(|r| r.turn_f64()).collect();
        prop_assert_eq!(cells.len(), odd.len(), "{} roots {:?}", p, turns);
        for (cell, t) in cells.iter().zip(&odd) {
            let lo = (*cell as f64 + 0.5) * spacing;
            prop_assert!(lo <= *t && *t <= lo + spacing, "root {} outside cell {}", t, cell);
        }
    }

    #[test]
    fn refinement_is_stable(p in poly_strategy()) {
        for r in isolate_roots(&p).unwrap() {
            let coarse = r.refined(8);
            let fine = r.refined(30);
            let (lo, hi) = coarse.interval();
            let (flo, fhi) = fine.interval();
            prop_assert!(lo <= flo && fhi <= hi);
            prop_assert!(coarse.same_point(&fine));
            let a = coarse.turn_f64();
            let b = fine.turn_f64();
            prop_assert!((a - b).abs() < 1e-15);
        }
    }
}

fn laurent_eval(c: &[BigInt], t: Complex64) -> Complex64 {
    let d = c.len() as i32 / 2;
    c.iter().enumerate().fold(Complex64::zero(), |acc, (i, ci)| acc + ci.to_f64().unwrap() * t.powi(i as i32 - d))
}

/// Q of a torus knot straight from Rozansky's definition
/// Q = ¼(ab − a/b − b/a) + (1/ab)·Δ(t)/(t^{½} − t^{−½})·∂²/∂y²|₀ h(y),
/// h(y) = (t^{½}e^{y/2} − t^{−½}e^{−y/2})/Δ(te^y), with the second
/// derivative taken by Richardson-extrapolated central differences.
fn rozansky_q(k: TorusKnot, s: f64) -> f64 {
    let c = delta_torus(k).to_laurent();
    let t = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * s);
    let half = Complex64::from_polar(1.0, std::f64::consts::PI * s);
    let h = |y: f64| {
        let e = Complex64::new(y, 0.0).exp();
        let e2 = Complex64::new(y / 2.0, 0.0).exp();
        (half * e2 - half.inv() / e2) / laurent_eval(&c, t * e)
    };
    let d2 = |step: f64| (h(step) - 2.0 * h(0.0) + h(-step)) / (step * step);
    let (s1, s2) = (1e-3, 5e-4);
    let second = (4.0 * d2(s2) - d2(s1)) / 3.0;
    let g = laurent_eval(&c, t) / (half - half.inv()) * second;
    let (a, b) = (k.a() as f64, k.b() as f64);
    let q = 0.25 * (a * b - a / b - b / a) + g / (a * b);
    assert!(q.im.abs() < 1e-6 * q.re.abs().max(1.0), "Q not real: {q}");
    q.re
}

#[test]
fn torus_q_matches_rozansky_definition() {
    for k in torus_pairs(40) {
        for s in [0.013, 0.071, 0.1999, 0.3141, 0.4567] {
            let near_root = roots_torus(k).iter().any(|r| (r.to_f64().unwrap() - s).abs() < 0.01);
            if near_root {
                continue;
            }
            let mine = q_torus(k, s).unwrap();
            let theirs = rozansky_q(k, s);
            assert!(
                (mine - theirs).abs() <= 1e-7 * theirs.abs().max(1.0),
                "T({},{}) s={s}: {mine} vs {theirs}",
                k.a(),
                k.b()
            );
        }
    }
}

#[test]
fn torus_q_regular_at_one() {
    // At t = 1 the defining formula is 0/0; Q(1) = P(0) must be finite and
    // agree with the limit from nearby turns.
    for k in torus_pairs(30) {
        let at_zero = q_torus(k, 0.0).unwrap();
        assert_eq!(at_zero, 0.0, "T({},{})", k.a(), k.b());
        assert!(p_torus(k).coeffs()[0].is_zero());
        let near = rozansky_q(k, 1e-3);
        assert!(near.abs() < 1e-3 * (k.a() * k.b()) as f64, "T({},{}): {near}", k.a(), k.b());
    }
}
