//! Generators of the ideals attached to the triangle complex on a 2×2×2 table.

use margalg::ideals::{
    dim_via_jacobian, eta_parameterization, i_delta_gens, j_delta_gens, k_delta_gens, q_delta_gens, QMethod,
    RingContext,
};
use margalg::poly::{buchberger, Budget};
use margalg::verify::running_example;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (shape, triangle) = running_example();
    let budget = Budget::from_env();

    let i = i_delta_gens(&shape, &triangle)?;
    println!("{} has {} generators in R:", i.name, i.len());
    for g in &i.generators {
        println!("  {g}");
    }

    let s = RingContext::s_delta(&shape, &triangle)?;
    let (_, counts) = k_delta_gens(&s)?;
    println!(
        "S_Delta: {} variables, {} raw linear relations, {} minimal, torus dimension {}",
        counts.variables, counts.raw, counts.minimal, counts.dim_t
    );

    let j = j_delta_gens(&s)?;
    let q = q_delta_gens(&s, QMethod::Elimination, budget)?;
    let same = buchberger(s.ring(), &j.generators, budget)?.same_ideal(&buchberger(s.ring(), &q.generators, budget)?)?;
    println!("J_Delta: {} quadrics, Q_Delta: {} generators, equal ideals: {same}", j.len(), q.len());

    let facets_only = RingContext::s_delta_facets_only(&shape, &triangle)?;
    let (_, param) = eta_parameterization(&facets_only);
    println!("dimension of the toric image on facet variables: {}", dim_via_jacobian(&param, 1));
    Ok(())
}
