#include "trig/braid.hpp"

#include <algorithm>
#include <sstream>

namespace trig {

FreeWord::FreeWord(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) push(l);
}

FreeWord FreeWord::generator(int gen, int sign) {
  FreeWord w;
  w.push({gen, sign});
  return w;
}

void FreeWord::push(Letter l) {
  if (l.sign != 1 && l.sign != -1) throw DomainError("letter sign must be +1 or -1");
  if (l.gen < 1) throw DomainError("generator index must be positive");
  if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign)
    letters_.pop_back();
  else
    letters_.push_back(l);
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  FreeWord out = *this;
  for (const Letter& l : rhs.letters_) out.push(l);
  return out;
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push({it->gen, -it->sign});
  return out;
}

FreeWord FreeWord::conjugated_by(const FreeWord& w) const { return w * *this * w.inverse(); }

int FreeWord::cmp(const FreeWord& rhs) const {
  if (letters_.size() != rhs.letters_.size())
    return letters_.size() < rhs.letters_.size() ? -1 : 1;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const Letter &a = letters_[i], &b = rhs.letters_[i];
    if (a.gen != b.gen) return a.gen < b.gen ? -1 : 1;
    if (a.sign != b.sign) return a.sign < b.sign ? -1 : 1;
  }
  return 0;
}

std::vector<long> FreeWord::exponent_sums(int generator_count) const {
  std::vector<long> sums(generator_count + 1, 0);
  for (const Letter& l : letters_) {
    if (l.gen > generator_count) throw DomainError("generator index out of bounds");
    sums[l.gen] += l.sign;
  }
  return sums;
}

namespace {

std::string letters_to_string(const std::vector<Letter>& letters, char prefix) {
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    long exp = static_cast<long>(j - i) * letters[i].sign;
    if (!first) os << ' ';
    first = false;
    os << prefix << letters[i].gen;
    if (exp != 1) os << '^' << exp;
    i = j;
  }
  return os.str();
}

std::vector<Letter> parse_letters(const std::string& text, char prefix) {
  std::vector<Letter> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok[0] != prefix)
      throw DomainError("expected token starting with '" + std::string(1, prefix) + "': " + tok);
    std::size_t caret = tok.find('^');
    std::string gen_part = tok.substr(1, caret == std::string::npos ? caret : caret - 1);
    long exp = 1;
    if (caret != std::string::npos) exp = std::stol(tok.substr(caret + 1));
    int gen = std::stoi(gen_part);
    int sign = exp >= 0 ? 1 : -1;
    for (long n = 0; n < std::labs(exp); ++n) out.push_back({gen, sign});
  }
  return out;
}

}  // namespace

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  return letters_to_string(letters_, 'a');
}

FreeWord FreeWord::parse(const std::string& text) {
  if (text == "1") return {};
  return FreeWord(parse_letters(text, 'a'));
}

BraidWord BraidWord::sigma(int index, int sign) { return BraidWord({{index, sign}}); }

BraidWord BraidWord::tau() { return BraidWord({{2, 1}, {1, 1}}); }

BraidWord BraidWord::tau_power(long n) {
  BraidWord t = tau();
  return t.pow(n);
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  std::vector<Letter> letters = letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<Letter> letters;
  letters.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    letters.push_back({it->gen, -it->sign});
  return BraidWord(std::move(letters));
}

BraidWord BraidWord::pow(long n) const {
  BraidWord base = n >= 0 ? *this : inverse();
  BraidWord out;
  for (long i = 0; i < std::labs(n); ++i) out = out * base;
  return out;
}

std::string BraidWord::str() const {
  if (letters_.empty()) return "1";
  return letters_to_string(letters_, 's');
}

BraidWord BraidWord::parse(const std::string& text) {
  if (text == "1") return {};
  return BraidWord(parse_letters(text, 's'));
}

namespace {

int norm_index(int index) {
  int r = (index - 1) % 3;
  if (r < 0) r += 3;
  return r + 1;
}

// Substitute the images of a1,a2,a3 into w.
FreeWord substitute(const FreeWord& w, const std::array<FreeWord, 3>& images) {
  FreeWord out;
  for (const Letter& l : w.letters()) {
    if (l.gen > 3) throw DomainError("free word letter outside a1..a3");
    const FreeWord& img = images[l.gen - 1];
    if (l.sign > 0)
      out = out * img;
    else
      out = out * img.inverse();
  }
  return out;
}

FreeWord gen(int i, int s = 1) { return FreeWord::generator(i, s); }

// One letter s_i^{+-1}, i in {1,2}, applied to w.
FreeWord apply_basic(int i, int sign, const FreeWord& w) {
  std::array<FreeWord, 3> images = {gen(1), gen(2), gen(3)};
  if (i == 1) {
    if (sign > 0) {
      images[0] = gen(1) * gen(2) * gen(1, -1);
      images[1] = gen(1);
    } else {
      images[0] = gen(2);
      images[1] = gen(2, -1) * gen(1) * gen(2);
    }
  } else {
    if (sign > 0) {
      images[1] = gen(2) * gen(3) * gen(2, -1);
      images[2] = gen(2);
    } else {
      images[1] = gen(3);
      images[2] = gen(3, -1) * gen(2) * gen(3);
    }
  }
  return substitute(w, images);
}

// One letter of the braid word; s3 acts as s1^-1 s2 s1.
FreeWord apply_letter(Letter l, FreeWord w) {
  int i = norm_index(l.gen);
  if (i <= 2) return apply_basic(i, l.sign, w);
  if (l.sign > 0) {
    w = apply_basic(1, +1, w);
    w = apply_basic(2, +1, w);
    w = apply_basic(1, -1, w);
  } else {
    w = apply_basic(1, +1, w);
    w = apply_basic(2, -1, w);
    w = apply_basic(1, -1, w);
  }
  return w;
}

}  // namespace

FreeWord apply_braid(const BraidWord& b, const FreeWord& w) {
  FreeWord out = w;
  const auto& letters = b.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = apply_letter(*it, out);
  return out;
}

BraidAutomorphism automorphism_of(const BraidWord& b) {
  BraidAutomorphism a;
  for (int i = 1; i <= 3; ++i) a.images[i - 1] = apply_braid(b, gen(i));
  return a;
}

bool braid_equal(const BraidWord& b1, const BraidWord& b2) {
  return automorphism_of(b1) == automorphism_of(b2);
}

long degree(const BraidWord& b) {
  long d = 0;
  for (const Letter& l : b.letters()) d += l.sign;
  return d;
}

bool equal_mod_tau3(const BraidWord& b1, const BraidWord& b2) {
  long diff = degree(b2) - degree(b1);
  if (diff % 6 != 0) return false;
  long t = diff / 6;
  return braid_equal(b1 * BraidWord::tau_power(3 * t), b2);
}

Perm3 Perm3::transposition(int a, int b) {
  Perm3 p;
  std::swap(p.image[a - 1], p.image[b - 1]);
  return p;
}

Perm3 Perm3::operator*(const Perm3& rhs) const {
  Perm3 out;
  for (int i = 1; i <= 3; ++i) out.image[i - 1] = (*this)(rhs(i));
  return out;
}

Perm3 symmetric_image(const BraidWord& b) {
  Perm3 p;
  for (const Letter& l : b.letters()) {
    int i = norm_index(l.gen);
    Perm3 t = i == 1   ? Perm3::transposition(1, 2)
              : i == 2 ? Perm3::transposition(2, 3)
                       : Perm3::transposition(1, 3);
    p = p * t;
  }
  return p;
}

std::optional<long> recognize_central_power(const BraidWord& b) {
  long d = degree(b);
  if (d % 6 != 0) return std::nullopt;
  long n = d / 6;
  FreeWord c = gen(1) * gen(2) * gen(3);
  FreeWord cn = n >= 0 ? c : c.inverse();
  FreeWord conj;
  for (long i = 0; i < std::labs(n); ++i) conj = conj * cn;
  BraidAutomorphism a = automorphism_of(b);
  for (int i = 1; i <= 3; ++i)
    if (a.images[i - 1] != gen(i).conjugated_by(conj)) return std::nullopt;
  return n;
}

}  // namespace trig
