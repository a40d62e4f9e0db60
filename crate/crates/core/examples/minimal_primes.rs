//! Candidate minimal primes over I_Delta for the triangle and a path.

use margalg::complex::{minimal_prime_candidates, render_component};
use margalg::poly::Budget;
use margalg::{FaceSet, Shape, SimplicialComplex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let shape = Shape::new(vec![2, 2, 2])?;
    let face = |v: &[usize]| FaceSet::new(v.to_vec());
    let complexes = [
        SimplicialComplex::new(3, vec![face(&[1, 2]), face(&[1, 3]), face(&[2, 3])])?,
        SimplicialComplex::new(3, vec![face(&[1, 2]), face(&[2, 3])])?,
    ];
    for c in &complexes {
        println!("complex {c}:");
        for cand in minimal_prime_candidates(&shape, c)? {
            let rendered = render_component(&cand.descriptor, &shape, c, Budget::from_env())?;
            println!(
                "  {} [{}] {} generators",
                cand.descriptor.describe(c),
                cand.minimality,
                rendered.len()
            );
        }
    }
    Ok(())
}
