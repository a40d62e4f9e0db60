//! The substitution maps σ_Δ, τ_Δ, η_Δ and the Jacobian-rank dimension estimate.

use super::gens::margin_form;
use super::{IdealError, RingContext, RingKind};
use crate::linalg::Matrix;
use crate::poly::{PolyError, Polynomial, VarId};
use crate::rational::Q;
use crate::table::{Shape, Slot};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn require_s(s: &RingContext, p: &Polynomial) -> Result<(), IdealError> {
    if s.kind() != RingKind::SDelta {
        return Err(IdealError::Shape(format!("expected an S_Delta ring, got {}", s.kind().as_str())));
    }
    if !p.ring().same_vars(s.ring()) {
        return Err(PolyError::RingMismatch.into());
    }
    Ok(())
}

/// Images of the S_Δ variables under σ_Δ, in the ring Y.
pub fn sigma_parameterization(s: &RingContext) -> (RingContext, Vec<Polynomial>) {
    let y = RingContext::y(s.shape());
    let dims = s.shape().dims().to_vec();
    let axis_sum = |j: usize| {
        Polynomial::sum_of(y.ring(), (1..=dims[j - 1]).map(|i| y.y_var(j, Slot::Index(i)).expect("y variable")))
    };
    let images = s
        .selectors()
        .iter()
        .map(|sel| {
            sel.slots().iter().enumerate().fold(Polynomial::one(y.ring()), |acc, (j, slot)| {
                let factor = match slot {
                    Slot::Index(_) => y.var_poly(y.y_var(j + 1, *slot).expect("y variable")),
                    Slot::Plus => axis_sum(j + 1),
                };
                &acc * &factor
            })
        })
        .collect();
    (y, images)
}

/// Images of the S_Δ variables under η_Δ, in the ring Y•.
pub fn eta_parameterization(s: &RingContext) -> (RingContext, Vec<Polynomial>) {
    let yb = RingContext::y_bullet(s.shape());
    let images = s
        .selectors()
        .iter()
        .map(|sel| {
            sel.slots().iter().enumerate().fold(Polynomial::one(yb.ring()), |acc, (j, slot)| {
                &acc * &yb.var_poly(yb.y_var(j + 1, *slot).expect("y variable"))
            })
        })
        .collect();
    (yb, images)
}

/// `x[i⃗] ↦ ∏_j y[j,i_j]`, the Segre parameterization of R.
pub fn segre_parameterization(shape: &Shape) -> (RingContext, Vec<Polynomial>) {
    let y = RingContext::y(shape);
    let images = shape
        .indices()
        .map(|idx| {
            idx.iter().enumerate().fold(Polynomial::one(y.ring()), |acc, (j, &i)| {
                &acc * &y.var_poly(y.y_var(j + 1, Slot::Index(i)).expect("y variable"))
            })
        })
        .collect();
    (y, images)
}

pub fn sigma_delta_image(s: &RingContext, p: &Polynomial) -> Result<Polynomial, IdealError> {
    require_s(s, p)?;
    let (y, images) = sigma_parameterization(s);
    Ok(p.substitute(y.ring(), &images)?)
}

pub fn eta_delta_image(s: &RingContext, p: &Polynomial) -> Result<Polynomial, IdealError> {
    require_s(s, p)?;
    let (yb, images) = eta_parameterization(s);
    Ok(p.substitute(yb.ring(), &images)?)
}

/// `X[σ] ↦ x_σ`, a polynomial in R.
pub fn tau_delta_image(s: &RingContext, p: &Polynomial) -> Result<Polynomial, IdealError> {
    require_s(s, p)?;
    let r = RingContext::r(s.shape());
    let images: Vec<Polynomial> = s.selectors().iter().map(|sel| margin_form(&r, sel)).collect();
    Ok(p.substitute(r.ring(), &images)?)
}

/// Membership in `P_Δ = ker σ_Δ`.
pub fn p_delta_member(s: &RingContext, p: &Polynomial) -> Result<bool, IdealError> {
    Ok(sigma_delta_image(s, p)?.is_zero())
}

/// Rank of the Jacobian of `param` at `point`.
pub fn jacobian_rank_at(param: &[Polynomial], point: &[Q]) -> usize {
    let Some(first) = param.first() else { return 0 };
    let nv = first.ring().nvars();
    let rows = param
        .iter()
        .map(|f| (0..nv).map(|v| f.derivative(VarId(v)).eval(point)).collect())
        .collect();
    Matrix::from_rows(rows, nv).rank()
}

/// Dimension of the image closure of `param`: the larger Jacobian rank at two
/// seeded points with coordinates in `1..=13`.
pub fn dim_via_jacobian(param: &[Polynomial], seed: u64) -> usize {
    let Some(first) = param.first() else { return 0 };
    let nv = first.ring().nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..2)
        .map(|_| {
            let point: Vec<Q> = (0..nv).map(|_| Q::from_integer(rng.gen_range(1..=13i64).into())).collect();
            jacobian_rank_at(param, &point)
        })
        .max()
        .unwrap_or(0)
}
