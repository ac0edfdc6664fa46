#pragma once

namespace facemagic {

/// beta(m) = number of parity-preserving permutations of {1..(m-1)/2}:
/// ((m-1)/4)!^2 when m = 1 mod 4, ((m-3)/4)!((m+1)/4)! when m = 3 mod 4.
long long beta(int m);

/// Count of magic labelings with value 2mn+2, up to symmetries:
/// (tau(m,n)+tau(n,m)) * 2^((m+n)/2-3) * ((m-1)/2)! * ((n-1)/2)! for
/// distinct odd m,n; tau(m,m) * 2^(m-3) * (((m-1)/2)!)^2 on squares.
long long count_value_mid(int m, int n);

/// Lower bound for the value-(2mn+3) count (equally 2mn+1), up to
/// symmetries: the mid-count shape with the factorials replaced by
/// beta(m)beta(n).
long long lower_bound_value_plus(int m, int n);

/// Lower bound for the total count over all magic values:
/// mid count plus twice the plus bound.
long long lower_bound_total(int m, int n);

} // namespace facemagic
