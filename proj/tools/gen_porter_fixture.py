"""Regenerate tests/data/porter_vocabulary.tsv from NLTK's Porter stemmer.

MARTIN_EXTENSIONS mode follows the reference C implementation.
"""
import sys

from nltk.stem.porter import PorterStemmer

WORDS = """
caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing filing
happy sky relational conditional rational valenci hesitanci digitizer
conformabli radicalli differentli vileli analogousli vietnamization
predication operator feudalism decisiveness hopefulness callousness formaliti
sensitiviti sensibiliti triplicate formative formalize electriciti electrical
hopeful goodness revival allowance inference airliner gyroscopic adjustable
defensible irritant replacement adjustment dependent adoption homologou
communism activate angulariti homologous effective bowdlerize probate rate
cease controll roll generalization oscillators generously abatement
apply application applications applied operation operations operational
assign assigned assignment route routes routing routed select selected
selection user users uav uavs emergency emergencies hover hovering return
returned home flight flights available availability list listing panel
component components information info box icon resource resources provider
image requirement requirements design designs definition definitions
traceability trace traces traced tracing link links linked artifact
artifacts intermediate intermediates source sources target targets code
class classes method methods invoke invoked invocation field fields
parameter parameters type types comment comments sentence sentences word
words term terms biterm biterms consensual filter filtered filtering
enrich enriched enrichment similarity similarities vector vectors semantic
latent indexing divergence probability probabilities distribution matrix
retrieval precision recall measure measures average mean ranking ranked
rank threshold thresholds transitive transitivity outer inner path paths
hop hops candidate candidates abstraction abstract gap gaps system systems
software engineering engineer engineers maintenance maintain maintaining
drone drones fleet mission missions waypoint waypoints coordinate
coordinates monitoring monitor monitors vehicle vehicles aerial command
commands control controller controllers controlling manager managers
managing management configure configuration configurations validate
validation validator generate generated generator generation process
processing processed processor queue queues message messages messaging
connect connection connections connected disconnect simulate simulation
simulator state states status update updates updated updating event events
listener listeners handler handlers handle handling button buttons label
labels layout layouts window windows dialog confirm confirmation style
styles theme themes render rendering view views display displayed
displaying show showing shown visible visibility enable enabled disable
disabled create created creating creation delete deleted deleting remove
removed removal insert inserted insertion search searching searched query
queries database databases store stored storage record records recording
patient patients medical medication medications doctor doctors hospital
nurse nurses clinical treatment treatments prescription prescriptions
schedule scheduled scheduling appointment appointments account accounts
login logout password passwords security secure authentication authorize
authorization permission permissions role roles network networks protocol
protocols packet packets server servers client clients request requests
response responses timeout timeouts buffer buffers allocate allocation
memory memories thread threads synchronize synchronization lock locks
quickly generally effectively efficiency efficient happily beautiful
beautifully arguing argued argues argument arguments national nationalism
nationality nationalize relativity relate related relating relation
relations relationship relationships conditionally traditional tradition
"""


def main() -> int:
    stemmer = PorterStemmer(mode=PorterStemmer.MARTIN_EXTENSIONS)
    seen = set()
    out = sys.stdout
    out.write("# word\tstem\n")
    for word in WORDS.split():
        if word in seen:
            continue
        seen.add(word)
        out.write(f"{word}\t{stemmer.stem(word, to_lowercase=False)}\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
