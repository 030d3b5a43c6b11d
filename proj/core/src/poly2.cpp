/*
   Copyright 2026 the evo project contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "evo/poly2.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

#include "evo/errors.hpp"

namespace evo {

namespace {

constexpr int kWordBits = 64;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mulmod_u64(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_u64(std::uint64_t n, std::map<std::uint64_t, int>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

}  // namespace

Poly2 poly2_from_words(std::vector<std::uint64_t> w) {
    Poly2 p;
    p.words_ = std::move(w);
    p.trim();
    return p;
}

Poly2::Poly2(std::uint64_t bits) {
    if (bits) words_.push_back(bits);
}

Poly2 Poly2::monomial(int k) {
    Poly2 p;
    p.set(k);
    return p;
}

Poly2 Poly2::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty polynomial literal");
    try {
        if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
            Poly2 p;
            for (std::size_t i = 2; i < text.size(); ++i) {
                char c = text[i];
                if (c == '\'') continue;
                if (c != '0' && c != '1') throw ParseError("bad binary digit in polynomial literal");
                int k = static_cast<int>(text.size() - 1 - i);
                if (c == '1') p.set(k);
            }
            return p;
        }
        std::size_t pos = 0;
        std::uint64_t v = std::stoull(text, &pos, 0);
        if (pos != text.size()) throw ParseError("trailing characters in polynomial literal: " + text);
        return Poly2(v);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad polynomial literal: " + text);
    } catch (const std::out_of_range&) {
        throw ParseError("polynomial literal out of range: " + text);
    }
}

void Poly2::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

int Poly2::degree() const {
    if (words_.empty()) return -1;
    return static_cast<int>(words_.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(words_.back()));
}

int Poly2::valuation() const {
    if (words_.empty()) return -1;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i]) return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]);
    }
    return -1;
}

int Poly2::term_count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool Poly2::test(int k) const {
    std::size_t wi = static_cast<std::size_t>(k) / kWordBits;
    if (wi >= words_.size()) return false;
    return (words_[wi] >> (k % kWordBits)) & 1;
}

void Poly2::set(int k) {
    std::size_t wi = static_cast<std::size_t>(k) / kWordBits;
    if (wi >= words_.size()) words_.resize(wi + 1, 0);
    words_[wi] |= std::uint64_t{1} << (k % kWordBits);
}

std::vector<int> Poly2::exponents() const {
    std::vector<int> e;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            e.push_back(static_cast<int>(i) * kWordBits + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return e;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r;
    r.words_.resize(std::max(words_.size(), o.words_.size()), 0);
    for (std::size_t i = 0; i < r.words_.size(); ++i) {
        std::uint64_t a = i < words_.size() ? words_[i] : 0;
        std::uint64_t b = i < o.words_.size() ? o.words_[i] : 0;
        r.words_[i] = a ^ b;
    }
    r.trim();
    return r;
}

Poly2 Poly2::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly2 r;
    int wshift = k / kWordBits;
    int bshift = k % kWordBits;
    r.words_.assign(words_.size() + wshift + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        r.words_[i + wshift] ^= words_[i] << bshift;
        if (bshift) r.words_[i + wshift + 1] ^= words_[i] >> (kWordBits - bshift);
    }
    r.trim();
    return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    if (is_zero() || o.is_zero()) return Poly2();
    Poly2 r;
    r.words_.assign(words_.size() + o.words_.size() + 1, 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) {
        std::uint64_t w = o.words_[i];
        while (w) {
            int b = std::countr_zero(w);
            w &= w - 1;
            int k = static_cast<int>(i) * kWordBits + b;
            int wshift = k / kWordBits;
            int bshift = k % kWordBits;
            for (std::size_t j = 0; j < words_.size(); ++j) {
                r.words_[j + wshift] ^= words_[j] << bshift;
                if (bshift) r.words_[j + wshift + 1] ^= words_[j] >> (kWordBits - bshift);
            }
        }
    }
    r.trim();
    return r;
}

std::pair<Poly2, Poly2> Poly2::divmod(const Poly2& o) const {
    if (o.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly2 q;
    Poly2 r = *this;
    int db = o.degree();
    while (r.degree() >= db) {
        int shift = r.degree() - db;
        q.set(shift);
        r = r + o.shifted(shift);
    }
    return {q, r};
}

bool Poly2::divides(const Poly2& o) const {
    if (is_zero()) return o.is_zero();
    return o.divmod(*this).second.is_zero();
}

Poly2 Poly2::sqrt() const {
    Poly2 r;
    for (int e : exponents()) {
        if (e % 2 != 0) throw InvalidInput("sqrt of a non-square over GF(2)");
        r.set(e / 2);
    }
    return r;
}

Poly2 Poly2::derivative() const {
    Poly2 r;
    for (int e : exponents()) {
        if (e % 2 == 1) r.set(e - 1);
    }
    return r;
}

std::strong_ordering Poly2::operator<=>(const Poly2& o) const {
    if (int c = degree() - o.degree(); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (words_[i] != o.words_[i]) return words_[i] < o.words_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Poly2::to_string() const {
    if (is_zero()) return "0";
    auto e = exponents();
    std::ostringstream os;
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        if (it != e.rbegin()) os << "+";
        if (*it == 0)
            os << "1";
        else if (*it == 1)
            os << "X";
        else
            os << "X^" << *it;
    }
    return os.str();
}

std::string Poly2::to_bitmask() const {
    if (is_zero()) return "0b0";
    std::string s = "0b";
    for (int k = degree(); k >= 0; --k) s += test(k) ? '1' : '0';
    return s;
}

Poly2 gcd(const Poly2& a, const Poly2& b) {
    Poly2 x = a, y = b;
    while (!y.is_zero()) {
        Poly2 r = x % y;
        x = y;
        y = r;
    }
    return x;
}

Poly2 lcm(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) return Poly2();
    return (a * b) / gcd(a, b);
}

Poly2 powmod(const Poly2& base, std::uint64_t e, const Poly2& m) {
    Poly2 r = Poly2::one() % m;
    Poly2 b = base % m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

Poly2 frobenius_powmod(const Poly2& base, int k, const Poly2& m) {
    Poly2 r = base % m;
    for (int i = 0; i < k; ++i) r = (r * r) % m;
    return r;
}

bool is_irreducible(const Poly2& f) {
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    if (!f.constant_term()) return false;  // divisible by X
    // x^(2^n) == x mod f, and x^(2^(n/q)) != x for prime q | n.
    Poly2 x = Poly2::x();
    if (frobenius_powmod(x, n, f) != x % f) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q != 0 || !is_prime_u64(static_cast<std::uint64_t>(q))) continue;
        Poly2 t = frobenius_powmod(x, n / q, f) + x % f;
        if (!gcd(t, f).is_one()) return false;
    }
    return true;
}

Poly2 smallest_irreducible(int degree) {
    if (degree < 1) throw InvalidInput("irreducible degree must be >= 1");
    if (degree == 1) return Poly2::x();  // GF(2) itself: modulus X
    for (std::uint64_t bits = (std::uint64_t{1} << degree) + 1;; bits += 2) {
        Poly2 f(bits);
        if (f.degree() != degree) throw InvalidInput("no irreducible found (degree too large)");
        if (is_irreducible(f)) return f;
    }
}

namespace {

// Splits a squarefree product of irreducibles all of degree d with a
// deterministic element sequence (fixed seed, reproducible output).
void equal_degree_split(const Poly2& f, int d, std::vector<Poly2>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    // Char-2 equal-degree splitting: the trace t = sum_{i<d} r^(2^i) maps
    // each residue field onto GF(2), so gcd(t, f) cuts f whenever the traces
    // disagree between factors. Candidates r come from a fixed deterministic
    // sequence so the factor order is reproducible.
    for (std::uint64_t seed = 2;; ++seed) {
        Poly2 r(seed);
        r = r % f;
        Poly2 t = Poly2::zero();
        Poly2 cur = r;
        for (int i = 0; i < d; ++i) {
            t = t + cur;
            cur = (cur * cur) % f;
        }
        Poly2 g = gcd(t, f);
        if (!g.is_one() && g.degree() < f.degree()) {
            equal_degree_split(g, d, out);
            equal_degree_split(f / g, d, out);
            return;
        }
        Poly2 g2 = gcd(t + Poly2::one(), f);
        if (!g2.is_one() && g2.degree() < f.degree()) {
            equal_degree_split(g2, d, out);
            equal_degree_split(f / g2, d, out);
            return;
        }
    }
}

// Factor a squarefree polynomial with nonzero constant term.
std::vector<Poly2> factor_squarefree(Poly2 f) {
    std::vector<Poly2> out;
    Poly2 x = Poly2::x();
    Poly2 h = x % f;
    int d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            out.push_back(f);
            break;
        }
        h = (h * h) % f;  // h = x^(2^d) mod f
        Poly2 g = gcd(h + x, f);
        if (g.degree() > 0) {
            equal_degree_split(g, d, out);
            f = f / g;
            h = h % f;
        }
    }
    return out;
}

}  // namespace

std::vector<std::pair<Poly2, int>> factor_f2(const Poly2& f) {
    if (f.degree() < 1) throw InvalidInput("cannot factor a constant polynomial");
    std::map<Poly2, int> acc;
    Poly2 rest = f;
    int v = rest.valuation();
    if (v > 0) {
        acc[Poly2::x()] += v;
        rest = rest.divmod(Poly2::monomial(v)).first;
    }
    // Multiplicity via repeated square roots; squarefree part via gcd with
    // the derivative (in char 2 the derivative vanishes iff f is a square).
    std::vector<std::pair<Poly2, int>> stack{{rest, 1}};
    while (!stack.empty()) {
        auto [g, mult] = stack.back();
        stack.pop_back();
        if (g.degree() < 1) continue;
        Poly2 dg = g.derivative();
        if (dg.is_zero()) {
            stack.push_back({g.sqrt(), 2 * mult});
            continue;
        }
        Poly2 sf = g / gcd(g, dg);  // product of odd-multiplicity factors, squarefree
        for (const Poly2& irr : factor_squarefree(sf)) {
            int m = 0;
            Poly2 q = g;
            while (irr.divides(q)) {
                q = q / irr;
                ++m;
            }
            acc[irr] += m * mult;
        }
        Poly2 even = g;
        for (const Poly2& irr : factor_squarefree(sf)) {
            while (irr.divides(even)) even = even / irr;
        }
        if (even.degree() >= 1) stack.push_back({even, mult});
    }
    std::vector<std::pair<Poly2, int>> out(acc.begin(), acc.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t order_mod(const Poly2& g) {
    if (g.degree() < 1 || !g.constant_term()) throw InvalidInput("order_mod requires g(0) = 1 and deg g >= 1");
    std::uint64_t order = 1;
    int max_mult = 1;
    for (const auto& [irr, mult] : factor_f2(g)) {
        max_mult = std::max(max_mult, mult);
        int d = irr.degree();
        if (d >= 64) throw InvalidInput("order_mod: irreducible factor degree >= 64 unsupported");
        std::uint64_t e = (std::uint64_t{1} << d) - 1;
        std::map<std::uint64_t, int> primes;
        factor_u64(e, primes);
        std::uint64_t ord = e;
        for (const auto& [p, cnt] : primes) {
            for (int i = 0; i < cnt; ++i) {
                if (powmod(Poly2::x(), ord / p, irr).is_one())
                    ord /= p;
                else
                    break;
            }
        }
        order = std::lcm(order, ord);
    }
    std::uint64_t twopow = 1;
    while (twopow < static_cast<std::uint64_t>(max_mult)) twopow <<= 1;
    return order * twopow;
}

std::vector<std::pair<std::uint64_t, Poly2>> cyclotomic_product(std::uint64_t b) {
    if (b % 2 == 0 || b < 1) throw InvalidInput("cyclotomic_product requires odd b >= 1");
    std::vector<std::pair<std::uint64_t, Poly2>> out;
    for (std::uint64_t d = 1; d <= b; ++d) {
        if (b % d != 0) continue;
        Poly2 phi = Poly2::monomial(static_cast<int>(d)) + Poly2::one();  // X^d + 1
        for (const auto& [e, prev] : out) {
            if (d % e == 0) phi = phi / prev;
        }
        out.emplace_back(d, phi);
    }
    return out;
}

StrictionReport striction_of_exponents(const std::vector<int>& exponents) {
    if (exponents.size() < 2) throw MonomialInput("striction needs at least two terms");
    StrictionReport r;
    r.exponents = exponents;
    std::sort(r.exponents.begin(), r.exponents.end());
    r.valuation = r.exponents.front();
    r.degree = r.exponents.back();
    int g = 0;
    for (int e : r.exponents) g = std::gcd(g, e - r.valuation);
    r.sigma = g;
    return r;
}

StrictionReport striction(const Poly2& f) {
    return striction_of_exponents(f.exponents());
}

namespace {

Poly2 block_product(const std::vector<std::pair<Poly2, int>>& factors, const std::vector<int>& idx) {
    Poly2 p = Poly2::one();
    for (int i : idx) {
        for (int k = 0; k < factors[i].second; ++k) p = p * factors[i].first;
    }
    return p;
}

bool block_ok(const std::vector<std::pair<Poly2, int>>& factors, const std::vector<int>& idx, int p) {
    Poly2 prod = block_product(factors, idx);
    if (prod.term_count() < 2) return false;
    return striction(prod).sigma % p == 0;
}

// All divisors (degree >= 1) of prod factors[i]^mult[i].
void enumerate_divisors(const std::vector<std::pair<Poly2, int>>& fs, std::size_t i, const Poly2& cur,
                        std::vector<Poly2>& out) {
    if (i == fs.size()) {
        if (cur.degree() >= 1) out.push_back(cur);
        return;
    }
    Poly2 c = cur;
    for (int k = 0; k <= fs[i].second; ++k) {
        enumerate_divisors(fs, i + 1, c, out);
        c = c * fs[i].first;
    }
}

void maximal_chains(const std::vector<Poly2>& elems, const Poly2& top, std::vector<Poly2>& chain,
                    std::vector<std::vector<Poly2>>& out) {
    const Poly2& cur = chain.back();
    // covers of cur within elems: strict divisors with nothing strictly between
    std::vector<Poly2> covers;
    for (const Poly2& d : elems) {
        if (d == cur || !d.divides(cur)) continue;
        bool covered = true;
        for (const Poly2& z : elems) {
            if (z == cur || z == d) continue;
            if (d.divides(z) && z.divides(cur)) {
                covered = false;
                break;
            }
        }
        if (covered) covers.push_back(d);
    }
    if (covers.empty()) {
        std::vector<Poly2> c(chain.rbegin(), chain.rend());  // ascending by divisibility
        out.push_back(std::move(c));
        return;
    }
    std::sort(covers.begin(), covers.end());
    for (const Poly2& d : covers) {
        chain.push_back(d);
        maximal_chains(elems, top, chain, out);
        chain.pop_back();
    }
}

}  // namespace

CompatibleStructure compatible_structure(const Poly2& T, int p) {
    if (p < 1) throw InvalidInput("field degree must be >= 1");
    StrictionReport st = striction(T);
    if (st.sigma % p != 0) throw IncompatibleField("p does not divide the striction of T");
    CompatibleStructure cs;
    cs.valuation = T.valuation();
    Poly2 core = T.divmod(Poly2::monomial(cs.valuation)).first;
    cs.factors = factor_f2(core);

    // Finest partition: start with singletons, merge a violating block with
    // the next block in ascending order until every block complies.
    std::vector<std::vector<int>> blocks;
    for (std::size_t i = 0; i < cs.factors.size(); ++i) blocks.push_back({static_cast<int>(i)});
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (block_ok(cs.factors, blocks[i], p)) continue;
            std::size_t j = i + 1 < blocks.size() ? i + 1 : i - 1;
            if (blocks.size() == 1) throw IncompatibleField("no compatible partition exists");
            blocks[std::min(i, j)].insert(blocks[std::min(i, j)].end(), blocks[std::max(i, j)].begin(),
                                          blocks[std::max(i, j)].end());
            std::sort(blocks[std::min(i, j)].begin(), blocks[std::min(i, j)].end());
            blocks.erase(blocks.begin() + static_cast<long>(std::max(i, j)));
            changed = true;
            break;
        }
    }

    for (const auto& idx : blocks) {
        CompatibleBlock b;
        b.factor_indices = idx;
        std::vector<std::pair<Poly2, int>> sub;
        for (int i : idx) sub.push_back(cs.factors[i]);
        b.product = block_product(cs.factors, idx);
        std::vector<Poly2> divisors;
        enumerate_divisors(sub, 0, Poly2::one(), divisors);
        std::vector<Poly2> eligible;
        for (const Poly2& d : divisors) {
            if (d.term_count() >= 2 && striction(d).sigma % p == 0) eligible.push_back(d);
        }
        std::sort(eligible.begin(), eligible.end());
        std::vector<Poly2> chain{b.product};
        maximal_chains(eligible, b.product, chain, b.chains);
        cs.blocks.push_back(std::move(b));
    }
    return cs;
}

bool validate_subdivision(const std::vector<Poly2>& chain, const Poly2& product, int p) {
    if (chain.empty()) return false;
    if (!(chain.back() == product)) return false;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const Poly2& d = chain[i];
        if (d.degree() < 1 || d.term_count() < 2) return false;
        if (striction(d).sigma % p != 0) return false;
        if (i + 1 < chain.size() && !d.divides(chain[i + 1])) return false;
    }
    return true;
}

}  // namespace evo
