//! Boundary points of the compactified apartment, reached along fan
//! directions, and their stabilizers.

use tropical_bt::apartment::ApartmentPoint;
use tropical_bt::compactification::{
    block_condition_oracle, boundary_point_from_direction, boundary_stabilizes, sp_boundary_stabilizes, FanDirection,
};
use tropical_bt::matrix::FieldMatrix;
use tropical_bt::rational::int;
use tropical_bt::symplectic::SpApartmentPoint;
use tropical_bt::valued_field::FieldSpec;
use tropical_bt::weights_fans::{fan_f_rho, weights_identity_sl, weights_standard_sp};

fn main() -> tropical_bt::error::Result<()> {
    let spec = FieldSpec::qp(2)?;
    let fan = fan_f_rho(&weights_identity_sl(3));
    let x = ApartmentPoint::origin(3);
    let upper = FieldMatrix::from_integers(spec, &[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]])?;
    let lower = upper.transpose();
    for c in [[1, 0, 0], [1, 1, 0], [0, 0, 0]] {
        let d = FanDirection::from_point(&fan, &c.map(int))?;
        let b = boundary_point_from_direction(&x, &d)?;
        println!(
            "direction {c:?} -> {b} (stratum {:?}): upper {} / {}, lower {} / {}",
            b.stratum(),
            boundary_stabilizes(&upper, &b)?,
            block_condition_oracle(&upper, &b)?,
            boundary_stabilizes(&lower, &b)?,
            block_condition_oracle(&lower, &b)?
        );
    }
    let sp_fan = fan_f_rho(&weights_standard_sp(2));
    let y = SpApartmentPoint::origin(2);
    let g = FieldMatrix::from_integers(spec, &[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, -1], &[0, 0, 0, 1]])?;
    for c in [[1, 0], [1, 1], [0, -1]] {
        let d = FanDirection::from_point(&sp_fan, &c.map(int))?;
        println!("Sp_4 direction {c:?}: stabilizes {}", sp_boundary_stabilizes(&g, &y, &d)?);
    }
    Ok(())
}
