//! Build a table as a rank-1 part plus a zero-margin perturbation, then
//! recover both pieces and the complex of independent margins.

use margalg::table::sample_zero_margin_table;
use margalg::{FaceSet, Shape, SimplicialComplex, Table, Q};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let shape = Shape::new(vec![2, 2, 3])?;
    let triangle = SimplicialComplex::new(
        3,
        vec![FaceSet::new(vec![1, 2]), FaceSet::new(vec![1, 3]), FaceSet::new(vec![2, 3])],
    )?;
    let q = |n: i64, d: i64| Q::new(n.into(), d.into());
    let rank1 = Table::outer_product(&[
        vec![q(1, 3), q(2, 3)],
        vec![q(1, 4), q(3, 4)],
        vec![q(1, 2), q(1, 3), q(1, 6)],
    ])?;
    let noise = sample_zero_margin_table(&shape, &triangle, 7)?;
    let table = rank1.add(&noise.scale(&q(1, 50)))?;

    let show = |v: &[Q]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    println!("table entries: {}", show(table.entries()));
    println!("completely independent: {}", table.is_completely_independent());
    println!("independent on {triangle}: {}", table.is_delta_independent(&triangle)?);

    let (independent, remainder) = table.decompose()?;
    println!("recovered rank-1 part exactly: {}", independent == rank1);
    for (j, m) in remainder.one_margins().iter().enumerate() {
        println!("remainder margin on axis {}: {}", j + 1, show(m));
    }
    println!("margin on {{1,2}}: {}", show(table.marginalize(&FaceSet::new(vec![1, 2]))?.entries()));
    println!("detected complex: {}", table.detect_complex()?);
    Ok(())
}
