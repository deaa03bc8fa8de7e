//! Angular spectra of the three-body problem at truncation 100.
//!
//! Prints the orthogonal odd/even and the unitary low/high tables next to
//! the printed two-decimal values.

use cmlab::angular3::{printed_orthogonal_table, printed_unitary_table, reference_tables, ReferenceTable};
use cmlab::liealg::ClassKind;

fn main() -> cmlab::Result<()> {
    let dim = 100;
    if let ReferenceTable::Orthogonal(rows) = reference_tables(ClassKind::Orthogonal, dim, 10, false)? {
        println!(" p   δb_odd  |δψ_odd|  δb_even |δψ_even|   printed");
        for (row, want) in rows.iter().zip(printed_orthogonal_table()) {
            println!(
                "{:2}  {:7.4} {:8.4}  {:7.4} {:8.4}   {:?}",
                row.p, row.delta_b_odd, row.delta_psi_odd, row.delta_b_even, row.delta_psi_even, want
            );
        }
    }
    println!();
    if let ReferenceTable::Unitary(rows) = reference_tables(ClassKind::Unitary, dim, 10, false)? {
        println!(" l   δb^L    δb^H    |δψ|     printed");
        for (row, want) in rows.iter().zip(printed_unitary_table()) {
            println!("{:2}  {:6.4}  {:6.4}  {:6.4}   {:?}", row.l, row.delta_b_low, row.delta_b_high, row.delta_psi, want);
        }
    }
    Ok(())
}
