//! The tropical character hypersurface of the SL_3 adjoint representation
//! over Q with v_2 against the codimension-one skeleton of its fan.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tropical_bt::sampling;
use tropical_bt::tableaux::Partition;
use tropical_bt::valued_field::FieldSpec;
use tropical_bt::weights_fans::{fan_f_rho, skeleton_member, trop_hypersurface_member, weights_irrep_sl};

fn main() -> tropical_bt::error::Result<()> {
    let spec = FieldSpec::qp(2)?;
    let rho = weights_irrep_sl(&Partition::new(vec![2, 1, 0])?, 3)?;
    let fan = fan_f_rho(&rho);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut hits, mut agree) = (0, 0);
    let total = 500;
    for _ in 0..total {
        let x = sampling::rational_vector(3, 1, 3, &mut rng);
        let a = trop_hypersurface_member(&rho, spec, &x);
        hits += usize::from(a);
        agree += usize::from(a == skeleton_member(&fan, &x));
    }
    println!("{hits} of {total} integer points on the hypersurface; {agree} agree with the skeleton");
    Ok(())
}
