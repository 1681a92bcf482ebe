//! Doubly infinite Lerch sums: three-route agreement and the zero-free scan.
//!
//! Run with: cargo run --example lerch_scan [-- heatmap.csv]

use cislab::lerch::{h_closed, h_from_gm, h_series, write_heatmap_csv, zero_free_scan, LerchQuery};

fn main() {
    let q = LerchQuery {
        lambda: 0.3,
        x: 0.45,
        m: 4,
        terms: 50_000,
    };
    let series = h_series(&q).unwrap();
    let closed = h_closed(&q).unwrap();
    let poly = h_from_gm(&q).unwrap();
    println!("H(0.3, 0.45, 4) three ways:");
    println!(
        "  symmetric series: {} (tail bound {:.1e})",
        series.value, series.tail_bound
    );
    println!("  cot derivatives:  {closed}");
    println!("  polynomial route: {poly}");
    println!(
        "  spreads: {:.2e}, {:.2e}",
        (series.value - closed).norm(),
        (closed - poly).norm()
    );

    println!("\nminimum of |H| over a 64 x 64 half-step grid (zero-free region):");
    for m in 2..=6u32 {
        let report = zero_free_scan(m, 64, 64);
        println!(
            "  m = {m}: min |H| = {:.6} at (lambda, x) = ({:.4}, {:.4})",
            report.min_abs, report.lambda, report.x
        );
    }

    println!("\nalong lambda = 1/2 the sum does vanish (root of the polynomial factor):");
    let mut min = f64::INFINITY;
    let mut argmin = f64::NAN;
    for j in 0..257 {
        let x = (j as f64 + 0.5) / 257.0;
        let h = h_from_gm(&LerchQuery {
            lambda: 0.5,
            x,
            m: 2,
            terms: 0,
        })
        .unwrap();
        if h.norm() < min {
            min = h.norm();
            argmin = x;
        }
    }
    println!("  m = 2, lambda = 1/2: min |H| = {min:.6} near x = {argmin:.4}");

    if let Some(path) = std::env::args().nth(1) {
        let mut file = std::fs::File::create(&path).expect("create csv");
        write_heatmap_csv(3, 64, 64, &mut file).expect("write csv");
        println!("\nwrote the m = 3 heatmap to {path}");
    }
}
