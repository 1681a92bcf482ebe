//! The exponential-spline polynomial family: displayed members, the value at
//! one, unit-circle zero splits, and Riesz bounds of the B-spline translates.
//!
//! Run with: cargo run --example exponential_splines

use num_complex::Complex64;

use cislab::poly::zero_split;
use cislab::rational::rat;
use cislab::spline::{
    euler_frobenius, exp_spline_eval, exp_spline_series, gm_poly, gm_poly_f, stability_bounds,
};

fn main() {
    println!("exact members of the family at beta = 1/3:");
    for m in 1..=4u32 {
        let p = gm_poly(m, &rat("1/3"));
        println!("  order {m}: coefficients (ascending) {:?}", p.coeffs());
    }
    println!(
        "\nEuler-Frobenius cubic (integer-lattice denominator): {:?}",
        euler_frobenius(3).coeffs()
    );

    println!("\nzero split of the order-8 member against the unit circle:");
    for beta in [0.1, 0.3, 0.45, 0.55, 0.7, 0.9] {
        let split = zero_split(&gm_poly_f(8, beta)).unwrap();
        println!(
            "  beta = {beta}: {} inside, {} on, {} outside",
            split.inside, split.on_circle, split.outside
        );
    }

    println!("\nexponential spline along the real base, order 4, offset 0.3:");
    for t in [-2.0, -0.5, 0.5, 1.0, 2.0] {
        let tc = Complex64::new(t, 0.0);
        let poly_route = exp_spline_eval(4, 0.3, tc).unwrap();
        let series_route = exp_spline_series(4, 0.3, tc).unwrap();
        println!(
            "  t = {t:>4}: {:>12.8} (translate series {:>12.8})",
            poly_route.re, series_route.re
        );
    }

    println!("\nRiesz bounds of the B-spline translates:");
    for m in 1..=6u32 {
        let (a, b) = stability_bounds(m, 512);
        println!("  order {m}: A = {a:.9}, B = {b:.9}");
    }
}
