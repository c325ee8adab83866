//! Valuations, residues and uniformizers in Q with v_p and in F_p(T) with v_T.

use tropical_bt::rational::rat;
use tropical_bt::valued_field::{FieldElement, FieldSpec};

fn main() -> tropical_bt::error::Result<()> {
    let q2 = FieldSpec::qp(2)?;
    for q in [rat(12, 1), rat(3, 8), rat(-5, 6)] {
        let a = FieldElement::from_rational(q2, &q)?;
        println!("{q2}: v({a}) = {}", a.valuation());
    }
    let unit = FieldElement::from_rational(q2, &rat(7, 3))?;
    println!("{q2}: residue of {unit} = {}", unit.residue()?.value());

    let f3 = FieldSpec::fpt(3)?;
    // (T^2 + 2T) / (1 + T): valuation 1
    let a = FieldElement::from_polynomials(f3, &[0, 2, 1], &[1, 1])?;
    let pi = FieldElement::uniformizer(f3);
    println!("{f3}: v({a}) = {}, v(a / T) = {}", a.valuation(), a.div(&pi)?.valuation());
    println!("{f3}: residue of a / T = {}", a.div(&pi)?.residue()?.value());
    Ok(())
}
