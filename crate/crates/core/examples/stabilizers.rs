//! Stabilizers of apartment points: tropical fixed points, the valuation
//! inequalities, and the parahoric flag condition on the star of the origin.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tropical_bt::apartment::{face_address, parahoric_oracle, stabilizer_membership, OrderedPartition};
use tropical_bt::sampling;
use tropical_bt::tropical::valuation_inequality_oracle;
use tropical_bt::valued_field::FieldSpec;

fn main() -> tropical_bt::error::Result<()> {
    let spec = FieldSpec::qp(3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for face in OrderedPartition::all(3).iter().take(5) {
        let x = face.star_point();
        let g = sampling::stabilizer_element(spec, x.coords(), 4, &mut rng);
        let h = sampling::sl_element(spec, 3, &mut rng);
        println!("face {:?} at {} ({:?})", face.blocks(), x.to_json(), face_address(&x));
        for (name, m) in [("stabilizer word", &g), ("random element", &h)] {
            println!(
                "  {name}: tropical {}, inequalities {}, flag {}",
                stabilizer_membership(m, &x)?,
                valuation_inequality_oracle(m, &x.to_trop_vector())?,
                parahoric_oracle(m, &x)?
            );
        }
    }
    Ok(())
}
