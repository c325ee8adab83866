//! Sp_4: root elements, Weyl monomials and stabilizers of points
//! (x_1, x_2) embedded as (x_1, x_2, -x_2, -x_1).

use tropical_bt::rational::rat;
use tropical_bt::symplectic::{
    embed_point, is_symplectic, root_element, sp_stabilizer_membership, weyl_monomial, SpApartmentPoint,
};
use tropical_bt::valued_field::{FieldElement, FieldSpec};
use tropical_bt::weyl::{WeylElement, WeylType};

fn main() -> tropical_bt::error::Result<()> {
    let spec = FieldSpec::qp(5)?;
    let x = SpApartmentPoint::new(vec![rat(1, 4), rat(1, 8)]);
    println!("x = {} embeds as {}", x.to_json(), embed_point(&x).to_json());
    for (i, j, k) in [(0, 1, 0), (1, 0, 0), (1, 0, 1), (0, 3, 0), (3, 0, 1)] {
        let u = root_element(spec, 2, i, j, &FieldElement::uniformizer_power(spec, k));
        println!(
            "root element ({i},{j}) with v = {k}: symplectic {}, fixes x {}",
            is_symplectic(&u)?,
            sp_stabilizer_membership(&u, &x)?
        );
    }
    for w in WeylElement::all(WeylType::C, 2).iter().take(3) {
        let m = weyl_monomial(spec, w)?.to_matrix();
        println!("w = {:?} {:?}: moves x to {}", w.perm(), w.signs(), x.act(w).to_json());
        println!("{m}");
    }
    Ok(())
}
