//! The symbol curve of a transversal set, three winding computations, and an
//! optional CSV dump for plotting.
//!
//! Run with: cargo run --example symbol_curves [-- curve.csv]

use cislab::curve::{
    build_symbol_curve, curve_index, curve_min_modulus, numeric_winding_adaptive, write_curve_csv,
};
use cislab::transversal::{congruence_decompose, index_formula, sets};

fn main() {
    let set = sets::journe();
    let cd = congruence_decompose(&set);

    println!("Journe set: {} pieces, nu = {}", cd.l, cd.nu);
    println!(
        "{:>8} {:>8} {:>8} {:>8} {:>12}",
        "alpha", "formula", "curve", "sampled", "min |curve|"
    );
    for alpha in [0.0, 0.1, 0.3, 0.45, 0.7, 1.15, 1.3] {
        let curve = build_symbol_curve(&cd, alpha);
        let formula = index_formula(&cd, alpha)
            .map(|v| v.to_string())
            .unwrap_or_else(|_| "excluded".into());
        let closed = curve_index(&curve)
            .map(|v| v.to_string())
            .unwrap_or_else(|_| "-".into());
        let sampled = numeric_winding_adaptive(&curve)
            .map(|v| v.to_string())
            .unwrap_or_else(|_| "-".into());
        println!(
            "{alpha:>8} {formula:>8} {closed:>8} {sampled:>8} {:>12.6}",
            curve_min_modulus(&curve)
        );
    }

    // shifts on the excluded set drive the curve through the origin
    let curve = build_symbol_curve(&cd, 0.25);
    println!(
        "\nat alpha = 1/4 the curve touches the origin: min modulus = {:.3e}",
        curve_min_modulus(&curve)
    );

    if let Some(path) = std::env::args().nth(1) {
        let curve = build_symbol_curve(&cd, 0.3);
        let mut file = std::fs::File::create(&path).expect("create csv");
        write_curve_csv(&curve, 256, &mut file).expect("write csv");
        println!(
            "wrote {} samples of the alpha = 0.3 curve to {path}",
            16 * 257
        );
    }
}
