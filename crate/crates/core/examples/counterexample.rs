//! Tropicalization is not multiplicative: for g = [[1,1],[0,1]] and
//! h = [[1,0],[-1,1]], (gh)_trop differs from g_trop ∘ h_trop at (1, 0).

use tropical_bt::rational::int;
use tropical_bt::tropical::{non_action_witness, tropicalize, TropVector};
use tropical_bt::valued_field::FieldSpec;

fn main() -> tropical_bt::error::Result<()> {
    let spec = FieldSpec::qp(2)?;
    let (g, h) = non_action_witness(spec);
    let gh = g.mul(&h)?;
    let x = TropVector::from_rationals(&[int(1), int(0)]);
    println!("g =\n{g}h =\n{h}gh =\n{gh}");
    println!("(gh)_trop =\n{}", tropicalize(&gh)?);
    println!("(gh)_trop · x      = {}", tropicalize(&gh)?.apply(&x)?);
    println!("g_trop · h_trop · x = {}", tropicalize(&g)?.apply(&tropicalize(&h)?.apply(&x)?)?);
    Ok(())
}
