#pragma once

#include "fmzv/index.hpp"
#include "fmzv/word.hpp"

namespace fmzv {

// Quasi-shuffle (harmonic) product: the head rule
//   (k,u) * (l,v) = (k, u*(l,v)) + (l, (k,u)*v) + (k+l, u*v).
IndexCombo harmonic(const IndexCombo& u, const IndexCombo& v);
// The same product on H1 through the index form of each word.
WordCombo harmonic(const WordCombo& u, const WordCombo& v);

// Shuffle product: the sum over all letter interleavings.
WordCombo shuffle(const WordCombo& u, const WordCombo& v);

// The algebra endomorphism fixing x and sending y to c*x + y.
WordCombo sigma_sub(const WordCombo& v, const TPoly& c);

// The t-interpolation transform on H1: constants are fixed and
// S(y w) = y sigma(w) with sigma = sigma_sub(., t).  `inverse` uses -t,
// which undoes the forward transform.
WordCombo s_transform(const WordCombo& v, bool inverse = false);

// t-deformed products on H1, defined by transporting the plain products
// through the t-interpolation transform:
//   u *_t v = S^{-1}(S(u) * S(v)).
WordCombo t_harmonic(const WordCombo& u, const WordCombo& v);
IndexCombo t_harmonic(const IndexCombo& u, const IndexCombo& v);
WordCombo t_shuffle(const WordCombo& u, const WordCombo& v);

// Direct head-rule form of the t-harmonic product:
//   (k,u) * (l,v) = (k, u*(l,v)) + (l, (k,u)*v) + (1-2t)(k+l, u*v)
//                   + (t^2-t)(k+l+first part of u*v, rest)
// where the last term is dropped when u and v are both exhausted.
// Agrees with the transported product.
IndexCombo t_harmonic_recursive(const IndexCombo& u, const IndexCombo& v);

// Letter-level deformation of the shuffle: the usual head rule plus boundary
// corrections -[u' empty] rho(a)(b v') - [v' empty] rho(b)(a u') with
// rho(x) = 0, rho(y) = t y.  Reduces to the plain shuffle at t = 0 but is a
// genuinely different product from the transported t-shuffle (they disagree
// from weight 2 on); kept for comparison reporting only.
WordCombo t_shuffle_recursive(const WordCombo& u, const WordCombo& v);

// The anti-automorphism-like map on H1 sending z_{k_1}...z_{k_r} to
// (-1)^(k_1+...+k_r) z_{k_r}...z_{k_1}.
WordCombo nu_map(const WordCombo& v);

// The duality involution: x -> x + y, y -> -y (an algebra map).
WordCombo phi_word(const WordCombo& v);
// Its t-twist: -S^{-1} . phi . S on H1.
WordCombo phi_t(const WordCombo& v);

// The letter-swap dual on yH: y w -> y (w with x and y exchanged).
// Realises the Hoffman dual of indices at word level.
WordCombo alpha_tilde(const WordCombo& v);

// The derivation with x -> y(x+y)^(l-1)x and y -> -y(x+y)^(l-1)x, extended
// by the Leibniz rule.  `twisted` conjugates by the t-interpolation
// transform: S^{-1} . d . S.
WordCombo derivation(const WordCombo& v, int l, bool twisted = false);

// Affix operators.
WordCombo prepend_y(const WordCombo& v);
WordCombo strip_leading_y(const WordCombo& v);   // inverse of prepend_y
WordCombo strip_trailing_x(const WordCombo& v);  // inverse of appending x

}  // namespace fmzv
