//! Evaluates every shipped figure configuration under `configs/` and writes
//! the CSV grids (and verification reports) to `figures_out/`.
//!
//! Run with `cargo run --release --example export_figures`.

use defect_nls::config::parse_config;
use defect_nls::grid::{evaluate_grid, export_csv};
use defect_nls::verify::verify_all;
use std::path::Path;

fn main() -> defect_nls::Result<()> {
    let config_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs");
    let out_dir = Path::new("figures_out");
    std::fs::create_dir_all(out_dir)?;

    let mut names: Vec<_> = std::fs::read_dir(&config_dir)?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    names.sort();

    for path in names {
        let stem = path.file_stem().unwrap().to_string_lossy().into_owned();
        let cfg = parse_config(&path)?;
        let table = evaluate_grid(&cfg)?;
        let csv = out_dir.join(format!("{stem}.csv"));
        export_csv(&table, &csv)?;
        let report = verify_all(&cfg)?;
        report.write(&out_dir.join(format!("{stem}_report.json")))?;
        println!(
            "{stem}: {} rows -> {} ({})",
            table.rows.len(),
            csv.display(),
            if report.any_failed() {
                "checks FAILED"
            } else {
                "all checks passed"
            }
        );
    }
    println!("\nplot e.g. with pandas:");
    println!("  df = pd.read_csv('figures_out/fig2.csv'); df.pivot_table(index='t', columns='x', values='abs_u')");
    Ok(())
}
