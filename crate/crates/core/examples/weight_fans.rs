//! Weight polytopes and their normal fans for the standard representations
//! of SL_n and Sp_2n and for the adjoint representation of SL_3.

use tropical_bt::tableaux::Partition;
use tropical_bt::weights_fans::{
    fan_f_rho, vertices_of_polytope, weights_identity_sl, weights_irrep_sl, weights_standard_sp, WeightedCharacter,
};

fn show(name: &str, rho: &WeightedCharacter) {
    let fan = fan_f_rho(rho);
    println!("{name}: dimension {}, {} weights, {} vertices, {} maximal cones", rho.dimension(), rho.weights().len(), vertices_of_polytope(rho).len(), fan.len());
    for (mu, cone) in fan.cones() {
        println!("  vertex {:?}: {:?}", mu.coords(), cone.functionals());
    }
}

fn main() -> tropical_bt::error::Result<()> {
    show("SL_4 standard", &weights_identity_sl(4));
    show("Sp_4 standard", &weights_standard_sp(2));
    show("SL_3 adjoint", &weights_irrep_sl(&Partition::new(vec![2, 1, 0])?, 3)?);
    Ok(())
}
