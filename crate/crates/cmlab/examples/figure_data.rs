//! Plot data for the three-body angular modes: writes `fig_orthogonal.csv`
//! and `fig_unitary.csv` (φ, ψ_l columns, potential) to the directory given
//! as the first argument, default the system temp dir.

use std::path::PathBuf;

use cmlab::angular3::figure_data;
use cmlab::liealg::ClassKind;
use cmlab::report::{write_report, Cell, Format, Table};

fn main() -> cmlab::Result<()> {
    let dir = std::env::args_os().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    for (kind, name) in [(ClassKind::Orthogonal, "fig_orthogonal.csv"), (ClassKind::Unitary, "fig_unitary.csv")] {
        let fig = figure_data(kind, 100, 4, 721)?;
        let mut t = Table::new(fig.columns.iter().cloned());
        for row in &fig.rows {
            t.push(row.iter().map(|&v| Cell::Float(v)).collect())?;
        }
        let path = dir.join(name);
        write_report(&t, Format::Csv, Some(&path))?;
        println!("{} ({} rows)", path.display(), t.len());
        for (col, l, b, dpsi) in &fig.modes {
            println!("  {col}: l = {l}, b = {b:.4}, |δψ| = {dpsi:.4}");
        }
    }
    Ok(())
}
