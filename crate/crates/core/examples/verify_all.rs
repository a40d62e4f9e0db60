//! Runs every registered check and prints its report.

use margalg::poly::Budget;
use margalg::verify::{run_all, CheckOptions};

fn main() {
    let reports = run_all(CheckOptions::new(Budget::from_env(), 0));
    for r in &reports {
        println!("{:<26} {:<16} {:>8.2?}", r.id, r.status.to_string(), r.elapsed);
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!("{} of {} checks passed", reports.len() - failed, reports.len());
}
