//! Schur polynomials by tableaux and by the bialternant, and Kostka numbers.

use tropical_bt::rational::{int, rat};
use tropical_bt::tableaux::{contents, kostka, schur_eval, Partition};

fn main() -> tropical_bt::error::Result<()> {
    let lambda = Partition::new(vec![2, 1, 0])?;
    for (mu, k) in contents(&lambda, 3)? {
        println!("K({:?}, {mu:?}) = {k}", lambda.parts());
    }
    println!("K((3,2,1), (2,2,2)) = {}", kostka(&Partition::new(vec![3, 2, 1])?, &[2, 2, 2])?);
    let z = [int(2), rat(-1, 3), int(5)];
    let s = schur_eval(&lambda, &z)?;
    println!("S_(2,1,0)(2, -1/3, 5): tableaux {}, bialternant {:?}", s.tableaux, s.bialternant.map(|b| b.to_string()));
    Ok(())
}
