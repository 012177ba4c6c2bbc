//! Building diagrams in code: from a planar diagram code, and from free
//! loops with an explicit nesting.

use kbracket::diagram::format::serialize;
use kbracket::diagram::{FaceRef, Placement};
use kbracket::{kauffman_bracket, BracketConfig, Diagram};

fn main() {
    // trefoil with puncture 1 moved through its faces
    let code = [([1, 5, 2, 4], 1), ([3, 1, 4, 6], 1), ([5, 3, 6, 2], 1)];
    let outer = FaceRef::corner(0, 0);
    let planar = Diagram::from_pd(0, &code, vec![None], vec![Placement { side: outer, host: None }]).unwrap();
    print!("{}", serialize(&planar));
    for face in planar.faces().faces {
        let (c, i) = (face.corners[0] / 4, (face.corners[0] % 4) as u8);
        let punctures = vec![None, Some(FaceRef::corner(c, i))];
        let d = Diagram::from_pd(1, &code, punctures, vec![Placement { side: outer, host: None }]).unwrap();
        let r = kauffman_bracket(&d, &BracketConfig::default()).unwrap();
        println!("# puncture 1 in face {c}.{i}: Z/2 class {}, <D> = {}", d.z2_class(), r.bracket);
    }
    println!();

    // two loops, the second inside the first, puncture 1 innermost
    let placements = vec![
        Placement { side: FaceRef::Loop { index: 0, inside: false }, host: None },
        Placement {
            side: FaceRef::Loop { index: 1, inside: false },
            host: Some(FaceRef::Loop { index: 0, inside: true }),
        },
    ];
    let punctures = vec![None, Some(FaceRef::Loop { index: 1, inside: true })];
    let loops = Diagram::new(1, Vec::new(), Vec::new(), vec![0, 1], punctures, placements).unwrap();
    print!("{}", serialize(&loops));
    let r = kauffman_bracket(&loops, &BracketConfig::default()).unwrap();
    println!("# <D> = {}", r.bracket);
}
