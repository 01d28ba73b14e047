//! Sunflower, near-sunflower and focal tests on a few small families.

use sunforge::detect::{
    find_focal, find_near_sunflower, is_b_focal, is_focal, is_near_sunflower, is_sunflower,
};
use sunforge::Family;

fn main() -> sunforge::Result<()> {
    let fam = Family::from_strs(&["000", "001", "010", "100"])?;
    println!("family:\n{}", fam.to_text());
    println!("sunflower 0,1,2: {}", is_sunflower(&fam, &[0, 1, 2])?);
    println!(
        "near-sunflower 1,2,3: {}",
        is_near_sunflower(&fam, &[1, 2, 3])?
    );
    println!(
        "focal, focus 0, petals 1,2,3: {}",
        is_focal(&fam, 0, &[1, 2, 3])?
    );
    println!(
        "focal, focus 1, petals 0,2: {}",
        is_focal(&fam, 1, &[0, 2])?
    );
    println!(
        "1-focal, focus 1, petals 0,2: {}",
        is_b_focal(&fam, 1, &[0, 2], 1)?
    );

    let triangle = Family::from_strs(&["110", "101", "011"])?;
    println!(
        "near-sunflower of size 3 in {{110, 101, 011}}: {:?}",
        find_near_sunflower(&triangle, 3)?
    );
    println!(
        "focal triple in {{110, 101, 011}}: {:?}",
        find_focal(&triangle, 3)?
    );
    Ok(())
}
