#include "factfeel/lexicon.hpp"

// Built-in word lists. Tags follow the coarse tag set; one entry per line.
// The same content can be dumped to disk and edited (see Lexicon::dump_builtin).

namespace factfeel::lexicon_data {

const char* const kClosedClass = R"lex(the	DET
a	DET
an	DET
this	DET
that	DET
these	DET
those	DET
each	DET
every	DET
some	DET
all	DET
both	DET
either	DET
neither	DET
another	DET
such	DET
what	DET
which	DET
of	PREP
in	PREP
on	PREP
at	PREP
by	PREP
for	PREP
with	PREP
from	PREP
about	PREP
against	PREP
between	PREP
during	PREP
without	PREP
under	PREP
over	PREP
through	PREP
after	PREP
before	PREP
above	PREP
below	PREP
near	PREP
across	PREP
behind	PREP
beyond	PREP
despite	PREP
toward	PREP
towards	PREP
upon	PREP
within	PREP
among	PREP
along	PREP
around	PREP
off	PREP
per	PREP
via	PREP
into	PREP
onto	PREP
unto	PREP
as	PREP
until	PREP
since	PREP
i	PRON
you	PRON
he	PRON
she	PRON
it	PRON
we	PRON
they	PRON
me	PRON
him	PRON
us	PRON
them	PRON
myself	PRON
yourself	PRON
himself	PRON
herself	PRON
itself	PRON
ourselves	PRON
themselves	PRON
who	PRON
whom	PRON
someone	PRON
anyone	PRON
everyone	PRON
nobody	PRON
somebody	PRON
everybody	PRON
something	PRON
anything	PRON
everything	PRON
nothing	PRON
my	PRON
your	PRON
his	PRON
her	PRON
its	PRON
our	PRON
their	PRON
whose	PRON
be	AUX
is	AUX
are	AUX
was	AUX
were	AUX
been	AUX
being	AUX
am	AUX
has	AUX
have	AUX
had	AUX
do	AUX
does	AUX
did	AUX
can	AUX
could	AUX
will	AUX
would	AUX
shall	AUX
should	AUX
may	AUX
might	AUX
must	AUX
cannot	AUX
can't	AUX
won't	AUX
don't	AUX
doesn't	AUX
didn't	AUX
isn't	AUX
aren't	AUX
wasn't	AUX
weren't	AUX
hasn't	AUX
haven't	AUX
hadn't	AUX
couldn't	AUX
wouldn't	AUX
shouldn't	AUX
mustn't	AUX
and	CONJ
or	CONJ
but	CONJ
nor	CONJ
yet	CONJ
because	CONJ
although	CONJ
though	CONJ
while	CONJ
if	CONJ
when	CONJ
unless	CONJ
whereas	CONJ
whether	CONJ
so	CONJ
to	TO
not	ADV
n't	ADV
very	ADV
really	ADV
quite	ADV
too	ADV
also	ADV
just	ADV
only	ADV
even	ADV
still	ADV
never	ADV
always	ADV
often	ADV
sometimes	ADV
usually	ADV
rather	ADV
almost	ADV
perhaps	ADV
maybe	ADV
however	ADV
therefore	ADV
thus	ADV
moreover	ADV
instead	ADV
already	ADV
again	ADV
then	ADV
there	ADV
here	ADV
now	ADV
well	ADV
clearly	ADV
simply	ADV
completely	ADV
totally	ADV
absolutely	ADV
probably	ADV
actually	ADV
certainly	ADV
definitely	ADV
extremely	ADV
fairly	ADV
highly	ADV
indeed	ADV
merely	ADV
mostly	ADV
nearly	ADV
obviously	ADV
quite	ADV
truly	ADV
ultimately	ADV
no	ADJ
any	ADJ
many	ADJ
few	ADJ
several	ADJ
most	ADJ
more	ADJ
less	ADJ
own	ADJ
same	ADJ
other	ADJ
good	ADJ
bad	ADJ
new	ADJ
old	ADJ
big	ADJ
small	ADJ
great	ADJ
little	ADJ
long	ADJ
high	ADJ
low	ADJ
right	ADJ
wrong	ADJ
true	ADJ
false	ADJ
sad	ADJ
dumb	ADJ
absurd	ADJ
common	ADJ
whole	ADJ
certain	ADJ
clear	ADJ
sure	ADJ
free	ADJ
human	ADJ
main	ADJ
real	ADJ
simple	ADJ
)lex";

const char* const kVerbs = R"lex(say
says
said
see
sees
saw
seen
think
thinks
thought
know
knows
knew
known
want
wants
wanted
make
makes
made
go
goes
went
gone
get
gets
got
gotten
take
takes
took
taken
find
finds
found
give
gives
gave
given
tell
tells
told
read
reads
believe
believes
believed
agree
agrees
agreed
argue
argues
argued
claimed
show
shows
showed
shown
prove
proves
proved
proven
mean
means
meant
need
needs
needed
try
tries
tried
use
uses
used
come
comes
came
look
looks
looked
seem
seems
seemed
feel
feels
felt
create
creates
created
limit
limits
limited
observe
observes
observed
expect
expects
expected
measure
measures
measured
likes
liked
love
loves
loved
hate
hates
hated
live
lives
lived
exist
exists
existed
happen
happens
happened
provide
provides
provided
supported
accept
accepts
accepted
deny
denies
denied
understand
understands
understood
explain
explains
explained
consider
considers
considered
suppose
supposes
supposed
ask
asks
asked
call
calls
called
put
puts
keep
keeps
kept
let
lets
begin
begins
began
begun
start
starts
started
stop
stops
stopped
continue
continues
continued
increased
decreased
follow
follows
followed
lead
leads
led
allow
allows
allowed
cause
causes
caused
become
becomes
became
write
writes
wrote
written
speak
speaks
spoke
spoken
break
breaks
broke
broken
choose
chooses
chose
chosen
hold
holds
held
lose
loses
lost
meet
meets
met
pay
pays
paid
send
sends
sent
set
sets
sell
sells
sold
spend
spends
spent
teach
teaches
taught
win
wins
won
build
builds
built
buy
buys
bought
bring
brings
brought
catch
catches
caught
replace
replaces
replaced
violate
violates
violated
demanded
evolve
evolves
evolved
grow
grows
grew
grown
talk
talks
talked
discuss
discusses
discussed
respond
responds
responded
answered
questioned
like
)lex";

const char* const kParticiples = R"lex(observed
used
seen
taken
given
made
found
known
replaced
shown
proven
proved
written
said
told
done
gone
been
born
chosen
broken
spoken
driven
eaten
fallen
forgotten
frozen
hidden
held
kept
led
lost
met
paid
put
read
sent
set
sold
spent
taught
thought
understood
won
built
bought
brought
caught
created
limited
measured
expected
considered
called
killed
based
involved
related
required
supposed
elected
designed
defined
produced
caused
allowed
provided
supported
accepted
denied
explained
interested
believed
claimed
argued
agreed
violated
demanded
evolved
grown
begun
increased
decreased
followed
continued
stopped
started
answered
discussed
questioned
)lex";

}  // namespace factfeel::lexicon_data
