//! Reference h*-polynomials of `B̂_{k,n}`, indexed by `k` and `n - k`.

/// `(k, n - k, polynomial)`.
pub const HAT_HSTAR_TABLE: &[(usize, usize, &str)] = &[
    (1, 0, "1"),
    (1, 1, "z+1"),
    (1, 2, "z^2+4z+1"),
    (1, 3, "z^3+11z^2+11z+1"),
    (1, 4, "z^4+26z^3+66z^2+26z+1"),
    (1, 5, "z^5+57z^4+302z^3+302z^2+57z+1"),
    (2, 0, "1"),
    (2, 1, "z+1"),
    (2, 2, "z^2+3z+1"),
    (2, 3, "z^3 + 7z^2 + 7z + 1"),
    (2, 4, "z^4+14z^3+31z^2+14z+1"),
    (2, 5, "z^5+26z^4+109z^3+109z^2+26z+1"),
    (3, 0, "1"),
    (3, 1, "z+1"),
    (3, 2, "z^2+3z+1"),
    (3, 3, "z^3 + 6z^2 + 6z + 1"),
    (3, 4, "z^4+14z^3+31z^2+14z+1"),
    (3, 5, "z^5+19z^4+71z^3+71z^2+19z+1"),
    (4, 0, "1"),
    (4, 1, "z+1"),
    (4, 2, "z^2+3z+1"),
    (4, 3, "z^3 + 6z^2 + 6z + 1"),
    (4, 4, "z^4+10z^3+20z^2+10z+1"),
    (4, 5, "z^5+16z^4+56z^3+56z^2+16z+1"),
    (5, 0, "1"),
    (5, 1, "z+1"),
    (5, 2, "z^2+3z+1"),
    (5, 3, "z^3 + 6z^2 + 6z + 1"),
    (5, 4, "z^4+10z^3+20z^2+10z+1"),
    (5, 5, "z^5+15z^4+50z^3+50z^2+15z+1"),
    (6, 0, "1"),
    (6, 1, "z+1"),
    (6, 2, "z^2+3z+1"),
    (6, 3, "z^3 + 6z^2 + 6z + 1"),
    (6, 4, "z^4+10z^3+20z^2+10z+1"),
    (6, 5, "z^5+15z^4+50z^3+50z^2+15z+1"),
    (7, 0, "1"),
    (7, 1, "z+1"),
    (7, 2, "z^2+3z+1"),
    (7, 3, "z^3 + 6z^2 + 6z + 1"),
    (7, 4, "z^4+10z^3+20z^2+10z+1"),
    (7, 5, "z^5+15z^4+50z^3+50z^2+15z+1"),
    (1, 6, "z^6+120z^5+1191z^4+2416z^3+1191z^2+120z+1"),
    (1, 7, "z^7+247z^6+4293z^5+15619z^4+15619z^3+4293z^2+247z+1"),
    (2, 6, "z^6+46z^5+334z^4+623z^3+334z^2+46z+1"),
    (2, 7, "z^7+79z^6+937z^5+2951z^4+2951z^3+937z^2+79z+1"),
    (3, 6, "z^6+31z^5+191z^4+340z^3+191z^2+31z+1"),
    (3, 7, "z^7+49z^6+472z^5+1365z^4+1365z^3+472z^2+49z+1"),
    (4, 6, "z^6+25z^5+140z^4+242z^3+140z^2+25z+1"),
    (4, 7, "z^7+38z^6+322z^5+881z^4+881z^3+322z^2+38z+1"),
    (5, 6, "z^6+22z^5+115z^4+195z^3+115z^2+22z+1"),
    (5, 7, "z^7+32z^6+249z^5+656z^4+656z^3+249z^2+32z+1"),
    (6, 6, "z^6+21z^5+105z^4+175z^3+105z^2+21z+1"),
    (6, 7, "z^7+29z^6+211z^5+540z^4+540z^3+211z^2+29z+1"),
    (7, 6, "z^6+21z^5+105z^4+175z^3+105z^2+21z+1"),
    (7, 7, "z^7+28z^6+196z^5+490z^4+490z^3+196z^2+28z+1"),
    (8, 6, "z^6+21z^5+105z^4+175z^3+105z^2+21z+1"),
    (8, 7, "z^7+28z^6+196z^5+490z^4+490z^3+196z^2+28z+1"),
    (9, 6, "z^6+21z^5+105z^4+175z^3+105z^2+21z+1"),
    (9, 7, "z^7+28z^6+196z^5+490z^4+490z^3+196z^2+28z+1"),
];

/// The reference polynomial for `B̂_{k,n}`, if the table has that cell.
pub fn reference_hstar(k: usize, n: usize) -> Option<cyclic_polytope::IntPolynomial> {
    let col = n.checked_sub(k)?;
    HAT_HSTAR_TABLE
        .iter()
        .find(|&&(rk, rc, _)| rk == k && rc == col)
        .map(|&(_, _, p)| crate::parse::parse_polynomial(p).expect("table entries parse"))
}

/// Reference cells contradicted by direct enumeration of the class, with the
/// enumerated polynomial: `(k, n - k, polynomial)`.
pub const MISPRINTS: &[(usize, usize, &str)] = &[(3, 4, "z^4+11z^3+23z^2+11z+1")];

/// The enumerated replacement for a misprinted cell.
pub fn misprint_correction(k: usize, n: usize) -> Option<cyclic_polytope::IntPolynomial> {
    let col = n.checked_sub(k)?;
    MISPRINTS
        .iter()
        .find(|&&(rk, rc, _)| rk == k && rc == col)
        .map(|&(_, _, p)| crate::parse::parse_polynomial(p).expect("table entries parse"))
}
