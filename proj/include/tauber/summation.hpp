// Kahan compensated summation. Works for double and std::complex<double>
// (compensation acts componentwise through the complex arithmetic).

#ifndef TAUBER_SUMMATION_HPP
#define TAUBER_SUMMATION_HPP

namespace tauber {

template <class T>
class KahanSum {
public:
    void add(T v) {
        T y = v - comp_;
        T t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    T value() const { return sum_; }

private:
    T sum_{};
    T comp_{};
};

} // namespace tauber

#endif
