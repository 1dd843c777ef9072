#include "fibrephi/monomial_order.hpp"

#include "fibrephi/error.hpp"

namespace fibrephi {

namespace {

std::strong_ordering compare_lex(const Monomial& a, const Monomial& b, std::size_t begin,
                                 std::size_t end) {
  for (std::size_t i = begin; i < end; ++i)
    if (a[i] != b[i])
      return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering compare_grevlex(const Monomial& a, const Monomial& b, std::size_t begin,
                                     std::size_t end) {
  const auto da = a.degree_in(begin, end);
  const auto db = b.degree_in(begin, end);
  if (da != db)
    return da <=> db;
  for (std::size_t i = end; i > begin; --i)
    if (a[i - 1] != b[i - 1])
      return b[i - 1] <=> a[i - 1]; // smaller exponent in the last variable wins
  return std::strong_ordering::equal;
}

std::strong_ordering compare_range(MonomialOrder::Kind kind, const Monomial& a, const Monomial& b,
                                   std::size_t begin, std::size_t end) {
  switch (kind) {
  case MonomialOrder::Kind::lex:
    return compare_lex(a, b, begin, end);
  case MonomialOrder::Kind::grevlex:
    return compare_grevlex(a, b, begin, end);
  case MonomialOrder::Kind::block:
    break;
  }
  throw InternalInconsistency("nested block orders are not supported");
}

const char* kind_name(MonomialOrder::Kind k) {
  switch (k) {
  case MonomialOrder::Kind::lex:
    return "lex";
  case MonomialOrder::Kind::grevlex:
    return "grevlex";
  case MonomialOrder::Kind::block:
    return "block";
  }
  return "?";
}

} // namespace

MonomialOrder MonomialOrder::block(std::size_t boundary, Kind head, Kind tail,
                                   bool tail_dominates) {
  if (head == Kind::block || tail == Kind::block)
    throw PreconditionError("block order inner kinds must be lex or grevlex");
  MonomialOrder o;
  o.kind = Kind::block;
  o.boundary = boundary;
  o.head = head;
  o.tail = tail;
  o.tail_dominates = tail_dominates;
  return o;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.arity() != b.arity())
    throw RingMismatch("monomial arity mismatch");
  const std::size_t n = a.arity();
  switch (kind) {
  case Kind::lex:
    return compare_lex(a, b, 0, n);
  case Kind::grevlex:
    return compare_grevlex(a, b, 0, n);
  case Kind::block: {
    const std::size_t cut = boundary < n ? boundary : n;
    if (tail_dominates) {
      if (auto c = compare_range(tail, a, b, cut, n); c != 0)
        return c;
      return compare_range(head, a, b, 0, cut);
    }
    if (auto c = compare_range(head, a, b, 0, cut); c != 0)
      return c;
    return compare_range(tail, a, b, cut, n);
  }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe() const {
  if (kind != Kind::block)
    return kind_name(kind);
  return std::string("block(") + std::to_string(boundary) + "," + kind_name(head) + "," +
         kind_name(tail) + (tail_dominates ? ",tail" : ",head") + ")";
}

} // namespace fibrephi
