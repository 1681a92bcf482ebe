//! Complete-interpolation classification for shifted spline lattices.
//!
//! Sweeps the shift over [-2, 2] for orders 2..=6 and prints the verdict,
//! reproducing the |alpha| < 1/2 law; the index column shows the symbol's
//! winding number where it is defined.
//!
//! Run with: cargo run --example spline_classification

use cislab::operator::{cis_classify_spline, spline_index, SplineConfig, Verdict};

fn main() {
    println!("verdicts over the shift grid (C = complete interpolation, . = not):\n");
    print!("{:>6} ", "alpha");
    for m in 2..=6u32 {
        print!(" m={m}");
    }
    println!();
    for k in -16..=16i64 {
        let alpha = k as f64 / 8.0;
        print!("{alpha:>6} ");
        for m in 2..=6u32 {
            let cfg = SplineConfig::new(m, alpha);
            let mark = match cis_classify_spline(&cfg).unwrap() {
                Verdict::Cis => 'C',
                Verdict::NotCis(_) => '.',
            };
            print!("   {mark}");
        }
        println!();
    }

    println!("\nwinding numbers along the same grid (x marks the vanishing symbol):");
    for m in [2u32, 5] {
        print!("m={m}:");
        for k in -16..=16i64 {
            let alpha = k as f64 / 8.0;
            match spline_index(&SplineConfig::new(m, alpha)) {
                Ok(v) => print!(" {v:>2}"),
                Err(_) => print!("  x"),
            }
        }
        println!();
    }
}
