//! Gröbner bases and the derived ideal operations on a small example.

use margalg::poly::{buchberger, intersect, radical_member, saturate, Budget, Polynomial, Ring};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = Ring::grevlex(["a", "b", "c", "d"]);
    let p = |s: &str| Polynomial::parse(&ring, s);
    let budget = Budget::from_env();

    // 2×2 minors of [[a, b, c], [b, c, d]]: the twisted cubic.
    let cubic = vec![p("a*c - b^2")?, p("a*d - b*c")?, p("b*d - c^2")?];
    let gb = buchberger(&ring, &cubic, budget)?;
    println!("reduced basis:");
    for g in gb.generators() {
        println!("  {g}");
    }
    let f = p("a^2*d - b^3")?;
    println!("{f} in ideal: {}", gb.contains(&f)?);
    println!("normal form of a*d^2: {}", gb.normal_form(&p("a*d^2")?)?);

    let embedded = vec![p("a^2")?, p("a*b")?];
    println!("(a^2, a*b) : a^inf = {:?}", saturate(&embedded, &p("a")?, budget)?.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("(a) ∩ (b) = {:?}", intersect(&[p("a")?], &[p("b")?], budget)?.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("a in rad(a^3): {}", radical_member(&p("a")?, &[p("a^3")?], budget)?);
    Ok(())
}
