#include "tracelink/stopwords.hpp"

#include <algorithm>
#include <array>
#include <string_view>

namespace tracelink::corpus {
namespace {

// Glasgow IR stopword list plus modal "shall", contraction fragments and
// single letters. Kept sorted for binary search.
constexpr std::array kStopwords = std::to_array<std::string_view>({
    "a", "about", "above", "across", "after", "afterwards", "again", "against", "ain", "all",
    "almost", "alone", "along", "already", "also", "although", "always", "am", "among", "amongst",
    "amoungst", "amount", "an", "and", "another", "any", "anyhow", "anyone", "anything", "anyway",
    "anywhere", "are", "aren", "around", "as", "at", "b", "back", "be", "became", "because",
    "become", "becomes", "becoming", "been", "before", "beforehand", "behind", "being", "below",
    "beside", "besides", "between", "beyond", "bill", "both", "bottom", "but", "by", "c", "call",
    "can", "cannot", "cant", "co", "con", "could", "couldn", "couldnt", "cry", "d", "de",
    "describe", "detail", "did", "do", "does", "doing", "don", "done", "down", "due", "during",
    "e", "each", "eg", "eight", "either", "eleven", "else", "elsewhere", "empty", "enough", "etc",
    "even", "ever", "every", "everyone", "everything", "everywhere", "except", "f", "few",
    "fifteen", "fifty", "fill", "find", "fire", "first", "five", "for", "former", "formerly",
    "forty", "found", "four", "from", "front", "full", "further", "g", "get", "give", "go", "h",
    "had", "hadn", "has", "hasn", "hasnt", "have", "haven", "having", "he", "hence", "her", "here",
    "hereafter", "hereby", "herein", "hereupon", "hers", "herself", "him", "himself", "his", "how",
    "however", "hundred", "i", "ie", "if", "in", "inc", "indeed", "interest", "into", "is", "isn",
    "it", "its", "itself", "j", "just", "k", "keep", "l", "last", "latter", "latterly", "least",
    "less", "ll", "ltd", "m", "made", "many", "may", "me", "meanwhile", "might", "mill", "mine",
    "more", "moreover", "most", "mostly", "move", "much", "must", "mustn", "my", "myself", "n",
    "name", "namely", "needn", "neither", "never", "nevertheless", "next", "nine", "no", "nobody",
    "none", "noone", "nor", "not", "nothing", "now", "nowhere", "o", "of", "off", "often", "on",
    "once", "one", "only", "onto", "or", "other", "others", "otherwise", "our", "ours",
    "ourselves", "out", "over", "own", "p", "part", "per", "perhaps", "please", "put", "q", "r",
    "rather", "re", "s", "same", "see", "seem", "seemed", "seeming", "seems", "serious", "several",
    "shall", "shan", "she", "should", "shouldn", "show", "side", "since", "sincere", "six",
    "sixty", "so", "some", "somehow", "someone", "something", "sometime", "sometimes", "somewhere",
    "still", "such", "system", "t", "take", "ten", "than", "that", "the", "their", "them",
    "themselves", "then", "thence", "there", "thereafter", "thereby", "therefore", "therein",
    "thereupon", "these", "they", "thick", "thin", "third", "this", "those", "though", "three",
    "through", "throughout", "thru", "thus", "to", "together", "too", "top", "toward", "towards",
    "twelve", "twenty", "two", "u", "un", "under", "until", "up", "upon", "us", "v", "ve", "very",
    "via", "w", "was", "wasn", "we", "well", "were", "weren", "what", "whatever", "when", "whence",
    "whenever", "where", "whereafter", "whereas", "whereby", "wherein", "whereupon", "wherever",
    "whether", "which", "while", "whither", "who", "whoever", "whole", "whom", "whose", "why",
    "will", "with", "within", "without", "won", "would", "wouldn", "x", "y", "yet", "you", "your",
    "yours", "yourself", "yourselves", "z",
});

}  // namespace

bool is_stopword(std::string_view word) {
    return std::binary_search(kStopwords.begin(), kStopwords.end(), word);
}

std::size_t stopword_count() { return kStopwords.size(); }

}  // namespace tracelink::corpus
