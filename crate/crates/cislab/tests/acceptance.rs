//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cislab::curve::{build_symbol_curve, curve_index, numeric_winding_adaptive};
use cislab::lerch::{h_closed, h_from_gm, h_series, zero_free_scan, LerchQuery};
use cislab::operator::{
    cis_classify_spline, lattice_offset, reconstruct_experiment, spline_index,
    spline_symbol_samples, theta_coeffs, theta_eval, toeplitz_section, Generator, SplineConfig,
};
use cislab::poly::{zero_split, PolyR};
use cislab::rational::{rat, Rat};
use cislab::special::euler_poly;
use cislab::spline::{euler_frobenius, fm_eval, gm_poly, gm_poly_f, modified_euler_frobenius};
use cislab::transversal::{
    admissible_region, congruence_decompose, index_formula, sets, AlphaRegion, TransversalSet,
};

struct Criterion {
    number: u32,
    description: &'static str,
    budget: Duration,
    started: Instant,
    failures: Vec<String>,
}

impl Criterion {
    fn new(number: u32, description: &'static str, budget_secs: u64) -> Self {
        Criterion {
            number,
            description,
            budget: Duration::from_secs(budget_secs),
            started: Instant::now(),
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl Fn() -> String) {
        if !ok {
            self.failures.push(detail());
        }
    }

    fn finish(mut self) {
        let elapsed = self.started.elapsed();
        if elapsed > self.budget {
            self.failures.push(format!(
                "runtime {elapsed:.2?} exceeded budget {:?}",
                self.budget
            ));
        }
        let verdict = if self.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "ACCEPTANCE {:>2} [{verdict}] {} ({elapsed:.2?})",
            self.number, self.description
        );
        for f in &self.failures {
            println!("              - {f}");
        }
        assert!(
            self.failures.is_empty(),
            "criterion {} failed:\n{}",
            self.number,
            self.failures.join("\n")
        );
    }
}

fn region_of(set: &TransversalSet) -> AlphaRegion {
    admissible_region(&congruence_decompose(set)).unwrap()
}

fn admissible_as_strings(region: &AlphaRegion) -> Vec<(String, String)> {
    region
        .admissible_intervals()
        .iter()
        .map(|iv| {
            assert!(!iv.lo_closed && !iv.hi_closed, "interval {iv} not open");
            (iv.lo.to_string(), iv.hi.to_string())
        })
        .collect()
}

#[test]
fn criterion_01_symmetric_interval_golden() {
    let mut c = Criterion::new(
        1,
        "symmetric unit interval: admissible region is (-1/2, 1/2)",
        1,
    );
    let region = region_of(&sets::sinc());
    let got = admissible_as_strings(&region);
    c.check(got == vec![("-1/2".to_string(), "1/2".to_string())], || {
        format!("got {got:?}")
    });
    c.finish();
}

#[test]
fn criterion_02_littlewood_paley_golden() {
    let mut c = Criterion::new(
        2,
        "Littlewood-Paley: three open intervals and the label set",
        1,
    );
    let region = region_of(&sets::littlewood_paley());
    let got = admissible_as_strings(&region);
    let want: Vec<(String, String)> = [("-3/4", "-1/2"), ("-1/4", "1/4"), ("1/2", "3/4")]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    c.check(got == want, || format!("intervals {got:?}"));
    c.check(region.zero_cell_labels == vec![-2, 0, 1, 3], || {
        format!("labels {:?}", region.zero_cell_labels)
    });
    c.finish();
}

#[test]
fn criterion_03_journe_golden() {
    let mut c = Criterion::new(3, "Journe set: label set and seven intervals in eighths", 1);
    let region = region_of(&sets::journe());
    c.check(
        region.zero_cell_labels == vec![-9, -5, -3, 0, 1, 4, 6, 10],
        || format!("labels {:?}", region.zero_cell_labels),
    );
    let got = admissible_as_strings(&region);
    let want: Vec<(String, String)> = [
        ("-5/4", "-9/8"),
        ("-3/4", "-5/8"),
        ("-1/2", "-3/8"),
        ("-1/8", "1/8"),
        ("3/8", "1/2"),
        ("5/8", "3/4"),
        ("9/8", "5/4"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    c.check(got == want, || format!("intervals {got:?}"));
    c.finish();
}

#[test]
fn criterion_04_five_piece_golden() {
    let mut c = Criterion::new(4, "five-piece set: label set and nine intervals", 2);
    let region = region_of(&sets::asymmetric_five_piece());
    let mut want_labels = vec![
        0, 1, -1, 2, -2, 3, -4, 5, -5, 6, -9, 10, -10, 11, -11, 12, -15, 16, -16, 17, -17, 18, -27,
        28,
    ];
    want_labels.sort_unstable();
    c.check(region.zero_cell_labels == want_labels, || {
        format!("labels {:?}", region.zero_cell_labels)
    });
    let got = admissible_as_strings(&region);
    let want: Vec<(String, String)> = [
        ("-7/6", "-9/8"),
        ("-3/4", "-5/8"),
        ("-1/2", "-3/8"),
        ("-1/4", "-1/6"),
        ("-1/8", "1/8"),
        ("1/6", "1/4"),
        ("3/8", "1/2"),
        ("5/8", "3/4"),
        ("9/8", "7/6"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    c.check(got == want, || format!("intervals {got:?}"));
    c.finish();
}

#[test]
fn criterion_05_three_way_winding_agreement() {
    let mut c = Criterion::new(
        5,
        "closed form, curve sum, and sampled winding agree on 500 shifts",
        30,
    );
    let catalog = sets::all();
    let data: Vec<_> = catalog
        .iter()
        .map(|(name, set)| (*name, congruence_decompose(set)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut tested = 0;
    while tested < 500 {
        let (name, cd) = &data[tested % data.len()];
        let denom = rng.gen_range(1..=96i64);
        let half_width = cd.alpha_bound() + Rat::one();
        let max_numer = (&Rat::from_int(denom) * &half_width).floor_i64();
        let numer = rng.gen_range(-max_numer..=max_numer);
        let alpha = Rat::new(numer, denom);
        if cd.in_excluded_set(&alpha) {
            continue;
        }
        let expected = index_formula(cd, alpha.clone()).unwrap();
        let curve = build_symbol_curve(cd, alpha.to_f64());
        let closed = curve_index(&curve).unwrap_or(i64::MIN);
        let sampled = numeric_winding_adaptive(&curve).unwrap_or(i64::MIN);
        c.check(closed == expected && sampled == expected, || {
            format!("{name} at {alpha}: formula {expected}, curve {closed}, sampled {sampled}")
        });
        tested += 1;
    }
    c.finish();
}

#[test]
fn criterion_06_polynomial_goldens() {
    let mut c = Criterion::new(
        6,
        "polynomial family: displayed members, endpoint values, identities",
        5,
    );
    let betas = [rat("1/7"), rat("1/3"), rat("2/5"), rat("5/6"), rat("9/10")];

    for b in &betas {
        let one_minus = &Rat::one() - b;
        let b2 = b * b;
        let b3 = &b2 * b;
        let g2 = PolyR::new(vec![b.clone(), one_minus.clone()]);
        c.check(gm_poly(2, b) == g2, || format!("quadratic member at {b}"));
        let g3 = PolyR::new(vec![
            -b2.clone(),
            -(&(&Rat::one() + &(&Rat::from_int(2) * b)) - &(&Rat::from_int(2) * &b2)),
            -(&one_minus * &one_minus),
        ]);
        c.check(gm_poly(3, b) == g3, || format!("cubic member at {b}"));
        let g4 = PolyR::new(vec![
            b3.clone(),
            &(&(&Rat::one() + &(&Rat::from_int(3) * b)) + &(&Rat::from_int(3) * &b2))
                - &(&Rat::from_int(3) * &b3),
            &(&(&Rat::from_int(3) * &b3) - &(&Rat::from_int(6) * &b2)) + &Rat::from_int(4),
            &(&one_minus * &one_minus) * &one_minus,
        ]);
        c.check(gm_poly(4, b) == g4, || format!("quartic member at {b}"));
    }

    for m in 2..=12u32 {
        let expect =
            Rat::from_int((1..=(m as i64 - 1)).product::<i64>() * if m % 2 == 0 { 1 } else { -1 });
        for b in &betas {
            c.check(gm_poly(m, b).eval(&Rat::one()) == expect, || {
                format!("value at one, m={m} beta={b}")
            });
        }
        // integer and half-integer lattice identities
        let sign = Rat::from_int(if m % 2 == 0 { 1 } else { -1 });
        let plain = PolyR::monomial(sign.clone(), 1).mul(&euler_frobenius(m - 1));
        c.check(gm_poly(m, &rat("0")) == plain, || {
            format!("integer-lattice identity m={m}")
        });
        let halfpow = Rat::from_big(num_rational::BigRational::from_integer(
            num_bigint::BigInt::from(2).pow(m - 1),
        ))
        .recip();
        let half = modified_euler_frobenius(m - 1).scale(&(&sign * &halfpow));
        c.check(gm_poly(m, &rat("1/2")) == half, || {
            format!("half-integer-lattice identity m={m}")
        });
        // inversion symmetry
        for b in [rat("1/7"), rat("1/3"), rat("2/5")] {
            c.check(
                gm_poly(m, &(&Rat::one() - &b)).reversed() == gm_poly(m, &b),
                || format!("inversion symmetry m={m} beta={b}"),
            );
        }
    }
    c.finish();
}

#[test]
fn criterion_07_zero_count_law() {
    let mut c = Criterion::new(
        7,
        "unit-circle zero counts and real-simple-negative roots",
        10,
    );
    for m in 2..=10u32 {
        for &beta in &[0.1, 0.3, 0.45, 0.55, 0.7, 0.9] {
            let split = zero_split(&gm_poly_f(m, beta)).unwrap();
            let (want_inside, want_outside) = if beta < 0.5 {
                (m as usize / 2, (m as usize - 1) / 2)
            } else {
                ((m as usize - 1) / 2, m as usize / 2)
            };
            c.check(
                split.inside == want_inside
                    && split.outside == want_outside
                    && split.on_circle == 0,
                || {
                    format!(
                        "m={m} beta={beta}: got ({}, {}, {})",
                        split.inside, split.on_circle, split.outside
                    )
                },
            );
            let mut reals: Vec<f64> = Vec::new();
            for z in &split.roots {
                c.check(z.im.abs() < 1e-8, || format!("m={m} beta={beta}: imag {z}"));
                c.check(z.re < 0.0, || format!("m={m} beta={beta}: sign {z}"));
                reals.push(z.re);
            }
            reals.sort_by(f64::total_cmp);
            for pair in reals.windows(2) {
                c.check(pair[1] - pair[0] > 1e-8, || {
                    format!("m={m} beta={beta}: near-double root at {}", pair[0])
                });
            }
        }
    }
    c.finish();
}

#[test]
fn criterion_08_euler_polynomial_link() {
    let mut c = Criterion::new(
        8,
        "value at the imaginary unit reduces to Euler polynomials",
        2,
    );
    let i = Complex64::new(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for m in 1..=10u32 {
        for _ in 0..20 {
            let beta = rng.gen_range(0.001..0.999);
            let lhs = fm_eval(m, i, beta);
            let phase = i.powu(m) * (i * std::f64::consts::FRAC_PI_2 * m as f64).exp();
            let rhs =
                phase * 2f64.powi(m as i32 - 1) * euler_poly(m as usize - 1).to_float().eval(beta);
            c.check((lhs - rhs).norm() < 1e-9, || {
                format!(
                    "m={m} beta={beta}: |{lhs} - {rhs}| = {}",
                    (lhs - rhs).norm()
                )
            });
        }
    }
    c.finish();
}

#[test]
fn criterion_09_lerch_routes_and_zero_free_scan() {
    let mut c = Criterion::new(
        9,
        "three Lerch routes agree; grid scan stays away from zero",
        60,
    );
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let m = rng.gen_range(2..=6u32);
        let lambda = rng.gen_range(0.0..1.0);
        // keep a margin from the integer poles, where the sum's sheer size
        // would swamp the absolute part of the tolerance
        let x = rng.gen_range(-3i64..3) as f64 + rng.gen_range(0.2..0.8);
        let terms = match m {
            2 => 200_000,
            3 => 20_000,
            _ => 4_000,
        };
        let q = LerchQuery {
            lambda,
            x,
            m,
            terms,
        };
        let series = h_series(&q).unwrap();
        let closed = h_closed(&q).unwrap();
        let poly = h_from_gm(&q).unwrap();
        let budget = series.tail_bound + 1e-8;
        c.check((series.value - closed).norm() < budget, || {
            format!(
                "series vs closed at ({lambda}, {x}, {m}): {}",
                (series.value - closed).norm()
            )
        });
        c.check((series.value - poly).norm() < budget, || {
            format!(
                "series vs polynomial at ({lambda}, {x}, {m}): {}",
                (series.value - poly).norm()
            )
        });
    }
    for m in 2..=6u32 {
        let report = zero_free_scan(m, 64, 64);
        c.check(report.min_abs > 1e-4, || {
            format!(
                "scan minimum {} at ({}, {}) for m={m}",
                report.min_abs, report.lambda, report.x
            )
        });
    }
    c.finish();
}

#[test]
fn criterion_10_spline_classification_grid() {
    let mut c = Criterion::new(
        10,
        "spline verdict equals |alpha| < 1/2 on the 1/32 grid",
        60,
    );
    for m in 2..=8u32 {
        for k in -64..=64i64 {
            if k == -16 || k == 16 {
                continue; // alpha = ±1/2 excluded
            }
            let alpha = k as f64 / 32.0;
            let cfg = SplineConfig::new(m, alpha);
            let verdict = cis_classify_spline(&cfg).unwrap();
            let expect = alpha.abs() < 0.5;
            c.check(verdict.is_cis() == expect, || {
                format!("m={m} alpha={alpha}: verdict {verdict:?}")
            });

            let alpha0 = alpha - alpha.floor();
            if (alpha0 - 0.5).abs() < 1e-12 {
                continue; // index undefined on the vanishing line
            }
            let want_index = if alpha0 == 0.0 {
                -alpha as i64
            } else if alpha0 < 0.5 {
                -(alpha.floor() as i64)
            } else {
                -1 - alpha.floor() as i64
            };
            let got = spline_index(&cfg).unwrap();
            c.check(got == want_index, || {
                format!("m={m} alpha={alpha}: index {got}, branch value {want_index}")
            });
        }
    }
    c.finish();
}

#[test]
fn criterion_11_conditioning_contrast() {
    let mut c = Criterion::new(
        11,
        "finite-section conditioning and reconstruction contrast",
        120,
    );
    for m in [2u32, 3] {
        // bounded sections at an admissible shift
        let admissible = SplineConfig::new(m, 0.3);
        let samples = spline_symbol_samples(&admissible, 1024).unwrap();
        for n in [16usize, 32, 64, 128, 256] {
            let report = toeplitz_section(&samples, n).unwrap();
            c.check(report.cond < 1e3, || {
                format!("m={m} alpha=0.3 N={n}: cond {:.3e}", report.cond)
            });
        }

        // vanishing symbol: the criterion demands cond(256) beyond 1e6. A
        // simple zero on the circle only yields sigma_min ~ c/N, so this is
        // expected to fail with cond in the hundreds; reported as measured.
        let vanishing = SplineConfig::new(m, 0.5);
        let samples = spline_symbol_samples(&vanishing, 1024).unwrap();
        let report = toeplitz_section(&samples, 256).unwrap();
        c.check(report.cond > 1e6, || {
            format!(
                "m={m} alpha=0.5 N=256: cond {:.3e} (simple circle zero gives sigma_min ~ 1/N)",
                report.cond
            )
        });

        // reconstruction: interior error converges at an admissible shift...
        let ns = [32usize, 64, 128];
        let errors: Vec<f64> = ns
            .iter()
            .map(|&n| {
                reconstruct_experiment(&Generator::Spline(m), 0.3, n, 42)
                    .unwrap()
                    .inner_error
            })
            .collect();
        const CONVERGENCE_FLOOR: f64 = 1e-12;
        for w in errors.windows(2) {
            c.check(w[1] <= (1.1 * w[0]).max(CONVERGENCE_FLOOR), || {
                format!("m={m} alpha=0.3: inner errors not decreasing: {errors:?}")
            });
        }
        c.check(
            errors[ns.len() - 1] <= errors[0].max(CONVERGENCE_FLOOR),
            || format!("m={m} alpha=0.3: inner errors {errors:?}"),
        );

        // ...and stays order-one at an inadmissible one
        let stuck: Vec<f64> = ns
            .iter()
            .map(|&n| {
                reconstruct_experiment(&Generator::Spline(m), 0.75, n, 42)
                    .unwrap()
                    .max_error
            })
            .collect();
        c.check(
            stuck[ns.len() - 1] >= 0.9 * stuck[0] && stuck[ns.len() - 1] > 1e-3,
            || format!("m={m} alpha=0.75: max errors {stuck:?}"),
        );
    }
    c.finish();
}

#[test]
fn criterion_12_interpolant_kronecker_property() {
    let mut c = Criterion::new(12, "fundamental interpolant hits the Kronecker delta", 5);
    for m in 2..=6u32 {
        let table = theta_coeffs(m, 40, 1024).unwrap();
        let a = lattice_offset(m);
        let mut worst = 0.0f64;
        for n in -10i64..=10 {
            let value = theta_eval(&table, a + n as f64).unwrap();
            let expect = if n == 0 { 1.0 } else { 0.0 };
            worst = worst.max((value - expect).abs());
        }
        c.check(worst < 1e-8, || format!("m={m}: worst deviation {worst:e}"));
    }
    c.finish();
}
