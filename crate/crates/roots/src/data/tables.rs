// Reference tables: folding fibers and standard parity values on positive roots.

/// Positive H3 roots with their D6 fibers (short image first).
pub const D6_FIBERS: [(&str, &str, &str); 15] = [
    ("1,0,0", "e_1-e_2", "e_5+e_6"),
    ("0,1,0", "e_2-e_3", "e_4-e_5"),
    ("0,0,1", "e_5-e_6", "e_3-e_4"),
    ("1,1,0", "e_1-e_3", "e_4+e_6"),
    ("1,1,tau", "e_1-e_4", "e_3+e_5"),
    ("1,tau^2,tau", "e_1-e_5", "e_2+e_4"),
    ("1,tau^2,tau^2", "e_1-e_6", "e_2+e_3"),
    ("0,1,tau", "e_2-e_4", "e_3-e_6"),
    ("tau,tau^2,tau", "e_2+e_6", "e_1+e_4"),
    ("tau,2tau,tau^2", "e_3+e_4", "e_1+e_2"),
    ("0,tau,tau", "e_3-e_5", "e_2-e_6"),
    ("tau,tau,tau", "e_3+e_6", "e_1+e_5"),
    ("tau,tau,1", "e_4+e_5", "e_1+e_6"),
    ("0,tau,1", "e_4-e_6", "e_2-e_5"),
    ("tau,tau^2,tau^2", "e_2+e_5", "e_1+e_3"),
];

/// Positive H4 roots with their E8 fibers in simple-root coordinates.
pub const E8_FIBERS: [(&str, &str, &str); 60] = [
    ("0,0,0,1", "0,0,0,0,1,0,0,0", "0,0,1,0,0,0,0,0"),
    ("0,0,1,0", "0,1,0,0,0,0,0,0", "0,0,0,1,0,0,0,0"),
    ("0,1,0,0", "1,0,0,0,0,0,0,0", "0,0,0,0,0,1,0,0"),
    ("1,0,0,0", "0,0,0,0,0,0,1,0", "0,0,0,0,0,0,0,1"),
    ("0,0,tau,1", "0,0,0,1,1,0,0,0", "0,1,1,1,0,0,0,0"),
    ("0,0,tau,tau", "0,0,1,1,0,0,0,0", "0,1,1,1,1,0,0,0"),
    ("0,0,1,tau", "0,1,1,0,0,0,0,0", "0,0,1,1,1,0,0,0"),
    ("0,1,1,0", "1,1,0,0,0,0,0,0", "0,0,0,1,0,1,0,0"),
    ("1,1,0,0", "1,0,0,0,0,0,1,0", "0,0,0,0,0,1,0,1"),
    ("0,tau,tau,1", "0,0,0,1,1,1,0,0", "1,1,1,1,0,1,0,0"),
    ("0,tau,tau,tau", "0,0,1,1,0,1,0,0", "1,1,1,1,1,1,0,0"),
    ("0,1,1,tau", "1,1,1,0,0,0,0,0", "0,0,1,1,1,1,0,0"),
    ("1,1,1,0", "1,1,0,0,0,0,1,0", "0,0,0,1,0,1,0,1"),
    ("tau,tau,tau,1", "0,0,0,1,1,1,0,1", "1,1,1,1,0,1,1,1"),
    ("tau,tau,tau,tau", "0,0,1,1,0,1,0,1", "1,1,1,1,1,1,1,1"),
    ("0,tau,tau^2,tau", "0,1,1,1,0,1,0,0", "1,1,1,2,1,1,0,0"),
    ("0,1,tau^2,tau", "1,1,1,1,0,0,0,0", "0,1,1,2,1,1,0,0"),
    ("1,1,1,tau", "1,1,1,0,0,0,1,0", "0,0,1,1,1,1,0,1"),
    ("tau,tau,tau^2,tau", "0,1,1,1,0,1,0,1", "1,1,1,2,1,1,1,1"),
    ("0,tau,2tau,tau^2", "0,0,1,2,1,1,0,0", "1,2,2,2,1,1,0,0"),
    ("0,tau,tau^2,tau^2", "0,1,1,1,1,1,0,0", "1,1,2,2,1,1,0,0"),
    ("0,1,tau^2,tau^2", "1,1,1,1,1,0,0,0", "0,1,2,2,1,1,0,0"),
    ("1,1,tau^2,tau", "1,1,1,1,0,0,1,0", "0,1,1,2,1,1,0,1"),
    ("tau,tau,2tau,tau^2", "0,0,1,2,1,1,0,1", "1,2,2,2,1,1,1,1"),
    ("tau,tau,tau^2,tau^2", "0,1,1,1,1,1,0,1", "1,1,2,2,1,1,1,1"),
    ("tau,tau^2,tau^2,tau", "1,1,1,1,0,1,0,1", "1,1,1,2,1,2,1,1"),
    ("1,1,tau^2,tau^2", "1,1,1,1,1,0,1,0", "0,1,2,2,1,1,0,1"),
    ("1,tau^2,tau^2,tau", "1,1,1,1,0,1,1,0", "1,1,1,2,1,2,0,1"),
    ("tau,2tau,2tau,tau^2", "0,0,1,2,1,2,0,1", "2,2,2,2,1,2,1,1"),
    ("tau,tau^2,tau^2,tau^2", "1,1,1,1,1,1,0,1", "1,1,2,2,1,2,1,1"),
    ("1,tau^2,tau^2,tau^2", "1,1,1,1,1,1,1,0", "1,1,2,2,1,2,0,1"),
    ("tau,2tau,2tau+1,tau^2", "0,1,1,2,1,2,0,1", "2,2,2,3,1,2,1,1"),
    ("tau,tau^2,2tau+1,tau^2", "1,1,1,2,1,1,0,1", "1,2,2,3,1,2,1,1"),
    ("1,tau^2,2tau+1,tau^2", "1,1,1,2,1,1,1,0", "1,2,2,3,1,2,0,1"),
    ("tau,2tau,2tau+1,2tau+1", "0,1,2,2,1,2,0,1", "2,2,3,3,2,2,1,1"),
    ("tau,tau^2,2tau+1,2tau+1", "1,1,2,2,1,1,0,1", "1,2,3,3,2,2,1,1"),
    ("1,tau^2,2tau+1,2tau+1", "1,1,2,2,1,1,1,0", "1,2,3,3,2,2,0,1"),
    ("tau,2tau,3tau+1,2tau+1", "0,1,2,3,1,2,0,1", "2,3,3,4,2,2,1,1"),
    ("tau,tau^2,2tau+2,2tau+1", "1,2,2,2,1,1,0,1", "1,2,3,4,2,2,1,1"),
    ("1,tau^2,2tau+2,2tau+1", "1,2,2,2,1,1,1,0", "1,2,3,4,2,2,0,1"),
    ("tau,2tau,3tau+1,2tau+2", "0,1,2,3,2,2,0,1", "2,3,4,4,2,2,1,1"),
    ("tau,2tau+1,3tau+1,2tau+1", "1,1,2,3,1,2,0,1", "2,3,3,4,2,3,1,1"),
    ("tau,2tau+1,2tau+2,2tau+1", "1,2,2,2,1,2,0,1", "2,2,3,4,2,3,1,1"),
    ("1,tau+2,2tau+2,2tau+1", "2,2,2,2,1,1,1,0", "1,2,3,4,2,3,0,1"),
    ("tau,2tau+1,3tau+1,2tau+2", "1,1,2,3,2,2,0,1", "2,3,4,4,2,3,1,1"),
    ("tau^2,2tau+1,3tau+1,2tau+1", "1,1,2,3,1,2,1,1", "2,3,3,4,2,3,1,2"),
    ("tau^2,2tau+1,2tau+2,2tau+1", "1,2,2,2,1,2,1,1", "2,2,3,4,2,3,1,2"),
    ("tau^2,tau+2,2tau+2,2tau+1", "2,2,2,2,1,1,1,1", "1,2,3,4,2,3,1,2"),
    ("tau,2tau+1,3tau+2,2tau+2", "1,2,2,3,2,2,0,1", "2,3,4,5,2,3,1,1"),
    ("tau^2,2tau+1,3tau+1,2tau+2", "1,1,2,3,2,2,1,1", "2,3,4,4,2,3,1,2"),
    ("tau,2tau+1,3tau+2,3tau+1", "1,2,3,3,1,2,0,1", "2,3,4,5,3,3,1,1"),
    ("tau^2,2tau+1,3tau+2,2tau+2", "1,2,2,3,2,2,1,1", "2,3,4,5,2,3,1,2"),
    ("tau^2,2tau+1,3tau+2,3tau+1", "1,2,3,3,1,2,1,1", "2,3,4,5,3,3,1,2"),
    ("tau^2,2tau+2,3tau+2,2tau+2", "2,2,2,3,2,2,1,1", "2,3,4,5,2,4,1,2"),
    ("tau^2,2tau+2,3tau+2,3tau+1", "2,2,3,3,1,2,1,1", "2,3,4,5,3,4,1,2"),
    ("tau^2,2tau+2,3tau+3,3tau+1", "2,3,3,3,1,2,1,1", "2,3,4,6,3,4,1,2"),
    ("2tau,3tau+1,4tau+2,3tau+2", "1,2,3,4,2,3,0,2", "3,4,5,6,3,4,2,2"),
    ("tau^2,3tau+1,4tau+2,3tau+2", "1,2,3,4,2,3,1,1", "3,4,5,6,3,4,1,2"),
    ("tau^2,2tau+2,4tau+2,3tau+2", "2,2,3,4,2,2,1,1", "2,4,5,6,3,4,1,2"),
    ("tau^2,2tau+2,3tau+3,3tau+2", "2,3,3,3,2,2,1,1", "2,3,5,6,3,4,1,2"),
];

/// Parity values on positive H3 roots, columns rho1..rho3.
pub const H3_PARITY: [(&str, [(i8, i8); 3]); 15] = [
    ("0,0,1", [(1,1), (-1,-1), (-1,-1)]),
    ("0,tau,1", [(1,1), (1,-1), (1,1)]),
    ("0,tau,tau", [(-1,-1), (1,1), (1,-1)]),
    ("tau,tau,1", [(-1,1), (1,1), (-1,-1)]),
    ("0,1,tau", [(-1,1), (1,-1), (-1,-1)]),
    ("tau,tau,tau", [(1,-1), (-1,-1), (-1,1)]),
    ("0,1,0", [(-1,-1), (-1,-1), (1,-1)]),
    ("1,1,tau", [(1,-1), (1,1), (-1,1)]),
    ("tau,tau^2,tau", [(-1,1), (1,1), (-1,-1)]),
    ("1,1,0", [(1,1), (-1,-1), (1,1)]),
    ("1,tau^2,tau", [(-1,-1), (-1,1), (1,-1)]),
    ("tau,tau^2,tau^2", [(1,1), (-1,-1), (1,1)]),
    ("1,0,0", [(-1,-1), (1,1), (1,1)]),
    ("1,tau^2,tau^2", [(1,-1), (1,1), (-1,1)]),
    ("tau,2tau,tau^2", [(1,1), (-1,1), (1,1)]),
];

/// Parity values on positive H4 roots, columns rho0..rho3.
pub const H4_PARITY: [(&str, [(i8, i8); 4]); 60] = [
    ("0,0,0,1", [(1,1), (1,1), (-1,-1), (-1,-1)]),
    ("0,0,1,0", [(1,1), (-1,-1), (-1,-1), (1,-1)]),
    ("0,1,0,0", [(-1,-1), (-1,-1), (1,1), (1,1)]),
    ("1,0,0,0", [(-1,-1), (1,1), (1,1), (1,1)]),
    ("0,0,tau,1", [(1,1), (1,1), (1,-1), (1,1)]),
    ("0,0,tau,tau", [(1,1), (-1,-1), (1,1), (1,-1)]),
    ("0,0,1,tau", [(1,1), (-1,1), (1,-1), (-1,-1)]),
    ("0,1,1,0", [(-1,1), (1,1), (-1,-1), (1,1)]),
    ("1,1,0,0", [(1,1), (-1,-1), (1,-1), (1,1)]),
    ("0,tau,tau,1", [(-1,-1), (-1,1), (1,1), (-1,-1)]),
    ("0,tau,tau,tau", [(1,1), (1,-1), (-1,-1), (-1,1)]),
    ("0,1,1,tau", [(-1,-1), (1,-1), (1,1), (-1,1)]),
    ("1,1,1,0", [(1,-1), (1,1), (-1,1), (1,-1)]),
    ("tau,tau,tau,1", [(1,-1), (1,1), (1,1), (1,1)]),
    ("tau,tau,tau,tau", [(-1,1), (1,1), (-1,-1), (1,-1)]),
    ("0,tau,tau^2,tau", [(1,1), (-1,1), (1,1), (-1,-1)]),
    ("0,1,tau^2,tau", [(-1,-1), (-1,-1), (-1,1), (1,-1)]),
    ("1,1,1,tau", [(1,1), (1,1), (1,1), (-1,-1)]),
    ("tau,tau,tau^2,tau", [(-1,1), (-1,-1), (1,1), (1,-1)]),
    ("0,tau,2tau,tau^2", [(-1,1), (1,1), (-1,1), (1,1)]),
    ("0,tau,tau^2,tau^2", [(-1,1), (1,1), (-1,-1), (1,1)]),
    ("0,1,tau^2,tau^2", [(-1,-1), (1,-1), (1,1), (-1,1)]),
    ("1,1,tau^2,tau", [(1,1), (-1,1), (-1,1), (1,-1)]),
    ("tau,tau,2tau,tau^2", [(1,1), (-1,1), (-1,1), (1,1)]),
    ("tau,tau,tau^2,tau^2", [(1,1), (-1,-1), (-1,-1), (-1,1)]),
    ("tau,tau^2,tau^2,tau", [(1,1), (1,1), (1,1), (1,-1)]),
    ("1,1,tau^2,tau^2", [(1,1), (-1,1), (1,1), (-1,1)]),
    ("1,tau^2,tau^2,tau", [(1,-1), (1,1), (1,1), (1,-1)]),
    ("tau,2tau,2tau,tau^2", [(1,1), (1,1), (-1,-1), (1,1)]),
    ("tau,tau^2,tau^2,tau^2", [(1,1), (1,1), (-1,1), (-1,1)]),
    ("1,tau^2,tau^2,tau^2", [(1,-1), (1,1), (-1,1), (-1,1)]),
    ("tau,2tau,2tau+1,tau^2", [(1,1), (-1,1), (1,1), (-1,1)]),
    ("tau,tau^2,2tau+1,tau^2", [(1,1), (-1,-1), (1,1), (-1,1)]),
    ("1,tau^2,2tau+1,tau^2", [(1,-1), (1,1), (1,1), (-1,1)]),
    ("tau,2tau,2tau+1,2tau+1", [(1,1), (-1,1), (-1,1), (1,1)]),
    ("tau,tau^2,2tau+1,2tau+1", [(1,1), (-1,-1), (-1,-1), (1,1)]),
    ("1,tau^2,2tau+1,2tau+1", [(1,-1), (1,1), (-1,-1), (1,1)]),
    ("tau,2tau,3tau+1,2tau+1", [(1,1), (-1,1), (1,1), (-1,-1)]),
    ("tau,tau^2,2tau+2,2tau+1", [(1,1), (-1,-1), (1,1), (1,1)]),
    ("1,tau^2,2tau+2,2tau+1", [(1,-1), (-1,1), (1,1), (1,1)]),
    ("tau,2tau,3tau+1,2tau+2", [(1,1), (-1,1), (1,1), (1,1)]),
    ("tau,2tau+1,3tau+1,2tau+1", [(-1,-1), (1,-1), (-1,1), (-1,-1)]),
    ("tau,2tau+1,2tau+2,2tau+1", [(-1,-1), (1,-1), (-1,-1), (1,1)]),
    ("1,tau+2,2tau+2,2tau+1", [(1,1), (1,-1), (1,1), (1,1)]),
    ("tau,2tau+1,3tau+1,2tau+2", [(-1,-1), (1,-1), (-1,-1), (1,1)]),
    ("tau^2,2tau+1,3tau+1,2tau+1", [(1,1), (1,1), (-1,1), (-1,-1)]),
    ("tau^2,2tau+1,2tau+2,2tau+1", [(1,1), (-1,1), (-1,-1), (1,1)]),
    ("tau^2,tau+2,2tau+2,2tau+1", [(-1,1), (-1,-1), (1,1), (1,1)]),
    ("tau,2tau+1,3tau+2,2tau+2", [(-1,-1), (1,1), (1,1), (-1,1)]),
    ("tau^2,2tau+1,3tau+1,2tau+2", [(1,1), (1,1), (-1,-1), (1,1)]),
    ("tau,2tau+1,3tau+2,3tau+1", [(-1,-1), (1,1), (1,1), (-1,-1)]),
    ("tau^2,2tau+1,3tau+2,2tau+2", [(1,1), (-1,1), (1,1), (-1,1)]),
    ("tau^2,2tau+1,3tau+2,3tau+1", [(1,1), (-1,1), (1,1), (-1,-1)]),
    ("tau^2,2tau+2,3tau+2,2tau+2", [(1,1), (1,-1), (1,1), (-1,1)]),
    ("tau^2,2tau+2,3tau+2,3tau+1", [(1,1), (1,-1), (-1,1), (-1,-1)]),
    ("tau^2,2tau+2,3tau+3,3tau+1", [(1,1), (1,1), (1,-1), (-1,1)]),
    ("2tau,3tau+1,4tau+2,3tau+2", [(-1,-1), (1,1), (1,1), (1,1)]),
    ("tau^2,3tau+1,4tau+2,3tau+2", [(-1,1), (1,-1), (1,1), (1,1)]),
    ("tau^2,2tau+2,4tau+2,3tau+2", [(1,1), (1,1), (-1,-1), (1,1)]),
    ("tau^2,2tau+2,3tau+3,3tau+2", [(1,1), (1,1), (-1,1), (1,-1)]),
];
