#ifndef TRIG_BRAID_HPP
#define TRIG_BRAID_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trig {

// Bad user input (CLI exit code 1).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computed quantity contradicts an identity that must hold (CLI exit code 2).
struct InvariantBreach : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Letter {
  int gen;   // generator index, >= 1
  int sign;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

// Freely reduced word in a free group. Letters are stored in display order:
// the word a1 a2^-1 is {(1,+1),(2,-1)}.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters);
  static FreeWord generator(int gen, int sign = +1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  void push(Letter l);  // append with cancellation
  FreeWord operator*(const FreeWord& rhs) const;
  FreeWord inverse() const;
  FreeWord conjugated_by(const FreeWord& w) const;  // w * this * w^-1
  bool operator==(const FreeWord&) const = default;
  bool operator<(const FreeWord& rhs) const { return cmp(rhs) < 0; }

  // Per-generator exponent sums; index 0 unused, size = max_gen+1.
  std::vector<long> exponent_sums(int generator_count) const;

  std::string str() const;  // "a1 a2^-1"
  static FreeWord parse(const std::string& text);

 private:
  int cmp(const FreeWord& rhs) const;
  std::vector<Letter> letters_;
};

// Word in the braid group B3. Generator indices are arbitrary integers,
// read mod 3 via the convention s_{3l+i} = s_i. Display order as in FreeWord:
// the last letter of the sequence acts first on a free word.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static BraidWord sigma(int index, int sign = +1);
  static BraidWord tau();        // s2 s1
  static BraidWord tau_power(long n);  // tau^n, n may be negative

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  BraidWord operator*(const BraidWord& rhs) const;  // concatenation: rhs acts first
  BraidWord inverse() const;
  BraidWord pow(long n) const;

  std::string str() const;  // "s1 s2^-1"
  static BraidWord parse(const std::string& text);

 private:
  std::vector<Letter> letters_;
};

// Faithful action of B3 on the free group <a1,a2,a3>.
struct BraidAutomorphism {
  std::array<FreeWord, 3> images;  // images of a1, a2, a3
  bool operator==(const BraidAutomorphism&) const = default;
};

// Permutation of {1,2,3}; image[i-1] is the image of i.
struct Perm3 {
  std::array<int, 3> image{1, 2, 3};
  static Perm3 identity() { return {}; }
  static Perm3 transposition(int a, int b);
  int operator()(int x) const { return image[x - 1]; }
  Perm3 operator*(const Perm3& rhs) const;  // composition: (*this)(rhs(x))
  bool operator==(const Perm3&) const = default;
};

FreeWord apply_braid(const BraidWord& b, const FreeWord& w);
BraidAutomorphism automorphism_of(const BraidWord& b);
bool braid_equal(const BraidWord& b1, const BraidWord& b2);
long degree(const BraidWord& b);
bool equal_mod_tau3(const BraidWord& b1, const BraidWord& b2);
Perm3 symmetric_image(const BraidWord& b);
std::optional<long> recognize_central_power(const BraidWord& b);

}  // namespace trig

#endif
