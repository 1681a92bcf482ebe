//! Admissible-shift regions for the worked one-transversal sets.
//!
//! For each set the example prints the validated pieces, the integer
//! translation data of each piece, and the exact region of shifts for which
//! the two-branch sample lattice interpolates the generated space completely.
//!
//! Run with: cargo run --example transversal_regions

use cislab::transversal::{admissible_region, congruence_decompose, index_formula, sets};

fn main() {
    for (name, set) in sets::all() {
        println!("== {name} ==");
        print!("pieces:");
        for piece in set.pieces() {
            print!(" {piece}");
        }
        println!();

        let cd = congruence_decompose(&set);
        println!(
            "L = {}, rho = {}, nu = {}, translations = {:?}",
            cd.l, cd.rho, cd.nu, cd.lambda
        );
        println!(
            "excluded families: odd multiples of {:?}",
            cd.g_denominators
                .iter()
                .map(|d| format!("1/{}", 2 * d))
                .collect::<Vec<_>>()
        );

        let region = admissible_region(&cd).unwrap();
        println!("index-zero cell labels: {:?}", region.zero_cell_labels);
        print!("admissible shifts:");
        for iv in region.admissible_intervals() {
            print!(" {iv}");
        }
        println!();

        // spot-check a few shifts against the closed-form winding number
        for numer in [0i64, 1, 3, 7] {
            let alpha = cislab::Rat::new(numer, 10);
            match index_formula(&cd, alpha.clone()) {
                Ok(index) => println!(
                    "  index at {alpha}: {index} -> {}",
                    if region.contains(&alpha) {
                        "admissible"
                    } else {
                        "not admissible"
                    }
                ),
                Err(e) => println!("  index at {alpha}: {e}"),
            }
        }
        println!();
    }
}
