"""Bundled frequency tables for synthetic person data.

Small top-N lists with rough relative counts; enough to give realistic
frequency skew for match weighting without any external data dependency.
"""

# (name, relative weight) -- heavier entries are drawn more often.
SURNAMES = [
    ("SMITH", 828), ("JOHNSON", 655), ("WILLIAMS", 550), ("BROWN", 487),
    ("JONES", 483), ("GARCIA", 395), ("MILLER", 393), ("DAVIS", 348),
    ("RODRIGUEZ", 335), ("MARTINEZ", 330), ("HERNANDEZ", 287), ("LOPEZ", 268),
    ("GONZALEZ", 261), ("WILSON", 242), ("ANDERSON", 235), ("THOMAS", 233),
    ("TAYLOR", 229), ("MOORE", 224), ("JACKSON", 216), ("MARTIN", 213),
    ("LEE", 211), ("PEREZ", 204), ("THOMPSON", 202), ("WHITE", 200),
    ("HARRIS", 190), ("SANCHEZ", 186), ("CLARK", 177), ("RAMIREZ", 175),
    ("LEWIS", 171), ("ROBINSON", 170), ("WALKER", 168), ("YOUNG", 163),
    ("ALLEN", 158), ("KING", 156), ("WRIGHT", 155), ("SCOTT", 152),
    ("TORRES", 151), ("NGUYEN", 150), ("HILL", 148), ("FLORES", 147),
    ("GREEN", 145), ("ADAMS", 143), ("NELSON", 140), ("BAKER", 139),
    ("HALL", 137), ("RIVERA", 135), ("CAMPBELL", 134), ("MITCHELL", 133),
    ("CARTER", 131), ("ROBERTS", 128), ("GOMEZ", 126), ("PHILLIPS", 124),
    ("EVANS", 123), ("TURNER", 121), ("DIAZ", 120), ("PARKER", 117),
    ("CRUZ", 116), ("EDWARDS", 115), ("COLLINS", 114), ("REYES", 112),
    ("STEWART", 111), ("MORRIS", 110), ("MORALES", 109), ("MURPHY", 108),
    ("COOK", 107), ("ROGERS", 106), ("GUTIERREZ", 104), ("ORTIZ", 103),
    ("MORGAN", 102), ("COOPER", 101), ("PETERSON", 100), ("BAILEY", 99),
    ("REED", 98), ("KELLY", 97), ("HOWARD", 96), ("RAMOS", 95),
    ("KIM", 94), ("COX", 93), ("WARD", 92), ("RICHARDSON", 91),
    ("WATSON", 90), ("BROOKS", 89), ("CHAVEZ", 88), ("WOOD", 87),
    ("JAMES", 86), ("BENNETT", 85), ("GRAY", 84), ("MENDOZA", 83),
    ("RUIZ", 82), ("HUGHES", 81), ("PRICE", 80), ("ALVAREZ", 79),
    ("CASTILLO", 78), ("SANDERS", 77), ("PATEL", 76), ("MYERS", 75),
    ("LONG", 74), ("ROSS", 73), ("FOSTER", 72), ("JIMENEZ", 71),
]

GIVEN_NAMES_A = [  # drawn for gender category "F"
    ("MARY", 410), ("PATRICIA", 210), ("JENNIFER", 180), ("LINDA", 175),
    ("ELIZABETH", 170), ("BARBARA", 150), ("SUSAN", 130), ("JESSICA", 120),
    ("SARAH", 110), ("KAREN", 105), ("LISA", 100), ("NANCY", 98),
    ("BETTY", 95), ("MARGARET", 93), ("SANDRA", 90), ("ASHLEY", 88),
    ("KIMBERLY", 85), ("EMILY", 83), ("DONNA", 80), ("MICHELLE", 78),
    ("CAROL", 75), ("AMANDA", 73), ("DOROTHY", 70), ("MELISSA", 68),
    ("DEBORAH", 66), ("STEPHANIE", 64), ("REBECCA", 62), ("SHARON", 60),
    ("LAURA", 58), ("CYNTHIA", 56), ("CATHERINE", 54), ("AMY", 52),
    ("ANGELA", 50), ("SHIRLEY", 48), ("ANNA", 46), ("RUTH", 44),
    ("BRENDA", 42), ("PAMELA", 40), ("NICOLE", 39), ("KATHERINE", 38),
    ("VIRGINIA", 37), ("CHRISTINE", 36), ("SAMANTHA", 35), ("DEBRA", 34),
    ("RACHEL", 33), ("CAROLYN", 32), ("JANET", 31), ("MARIA", 30),
    ("HEATHER", 29), ("DIANE", 28),
]

GIVEN_NAMES_B = [  # drawn for gender category "M"
    ("JAMES", 380), ("ROBERT", 350), ("JOHN", 345), ("MICHAEL", 340),
    ("WILLIAM", 280), ("DAVID", 270), ("RICHARD", 220), ("JOSEPH", 190),
    ("THOMAS", 180), ("CHARLES", 170), ("CHRISTOPHER", 160), ("DANIEL", 150),
    ("MATTHEW", 140), ("ANTHONY", 130), ("MARK", 125), ("DONALD", 120),
    ("STEVEN", 115), ("PAUL", 110), ("ANDREW", 105), ("JOSHUA", 100),
    ("KENNETH", 95), ("KEVIN", 90), ("BRIAN", 88), ("GEORGE", 85),
    ("EDWARD", 82), ("RONALD", 80), ("TIMOTHY", 78), ("JASON", 75),
    ("JEFFREY", 72), ("RYAN", 70), ("JACOB", 68), ("GARY", 65),
    ("NICHOLAS", 62), ("ERIC", 60), ("JONATHAN", 58), ("STEPHEN", 56),
    ("LARRY", 54), ("JUSTIN", 52), ("SCOTT", 50), ("BRANDON", 48),
    ("BENJAMIN", 46), ("SAMUEL", 44), ("GREGORY", 42), ("FRANK", 40),
    ("ALEXANDER", 39), ("RAYMOND", 38), ("PATRICK", 37), ("JACK", 36),
    ("DENNIS", 35), ("JERRY", 34),
]

CITIES = [
    ("NEW YORK", "NY", 840), ("LOS ANGELES", "CA", 390), ("CHICAGO", "IL", 270),
    ("HOUSTON", "TX", 230), ("PHOENIX", "AZ", 160), ("PHILADELPHIA", "PA", 150),
    ("SAN ANTONIO", "TX", 140), ("SAN DIEGO", "CA", 138), ("DALLAS", "TX", 130),
    ("SAN JOSE", "CA", 100), ("AUSTIN", "TX", 95), ("JACKSONVILLE", "FL", 90),
    ("FORT WORTH", "TX", 88), ("COLUMBUS", "OH", 87), ("CHARLOTTE", "NC", 85),
    ("INDIANAPOLIS", "IN", 84), ("SAN FRANCISCO", "CA", 83), ("SEATTLE", "WA", 75),
    ("DENVER", "CO", 71), ("BOSTON", "MA", 69), ("EL PASO", "TX", 68),
    ("NASHVILLE", "TN", 67), ("DETROIT", "MI", 66), ("OKLAHOMA CITY", "OK", 65),
    ("PORTLAND", "OR", 64), ("LAS VEGAS", "NV", 63), ("MEMPHIS", "TN", 62),
    ("LOUISVILLE", "KY", 61), ("BALTIMORE", "MD", 60), ("MILWAUKEE", "WI", 59),
    ("ALBUQUERQUE", "NM", 56), ("TUCSON", "AZ", 54), ("FRESNO", "CA", 53),
    ("SACRAMENTO", "CA", 52), ("MESA", "AZ", 51), ("KANSAS CITY", "MO", 50),
    ("ATLANTA", "GA", 49), ("OMAHA", "NE", 48), ("RALEIGH", "NC", 47),
    ("MIAMI", "FL", 46),
]

STREET_NAMES = [
    "MAIN ST", "OAK AVE", "MAPLE DR", "CEDAR LN", "PARK AVE", "ELM ST",
    "WASHINGTON BLVD", "LAKE VIEW RD", "SUNSET BLVD", "HIGHLAND AVE",
    "RIVER RD", "CHURCH ST", "SPRING ST", "MILL RD", "HILLCREST DR",
    "FOREST AVE", "MEADOW LN", "RIDGE RD", "WALNUT ST", "CHESTNUT ST",
]

EMPLOYERS = [
    ("ACME CORP", 120), ("GLOBEX", 90), ("INITECH", 80), ("UMBRELLA LLC", 70),
    ("STARK INDUSTRIES", 65), ("WAYNE ENTERPRISES", 60), ("WONKA FACTORY", 55),
    ("TYRELL CORP", 50), ("CYBERDYNE", 45), ("OSCORP", 40),
    ("VANDELAY INDUSTRIES", 38), ("PIED PIPER", 35), ("HOOLI", 33),
    ("DUNDER MIFFLIN", 30), ("MASSIVE DYNAMIC", 28), ("ABSTERGO", 26),
    ("BLUTH COMPANY", 24), ("PRESTIGE WORLDWIDE", 22), ("SOYLENT CORP", 20),
    ("GRINGOTTS", 18),
]

ETHNICITIES = ["E1", "E2", "E3", "E4", "E5"]

# canonical given name -> nicknames; both directions used by standardization.
NICKNAMES = {
    "CATHERINE": ["KATE", "CATHY", "KATIE", "CAT"],
    "KATHERINE": ["KATHY", "KAT", "KITTY"],
    "ELIZABETH": ["LIZ", "BETH", "BETSY", "ELIZA", "LIZZIE"],
    "MARGARET": ["MAGGIE", "MEG", "PEGGY", "MARGE"],
    "JENNIFER": ["JEN", "JENNY"],
    "JESSICA": ["JESS", "JESSIE"],
    "PATRICIA": ["PAT", "PATTY", "TRISH"],
    "REBECCA": ["BECKY", "BECCA"],
    "SUSAN": ["SUE", "SUSIE"],
    "DEBORAH": ["DEB", "DEBBIE"],
    "BARBARA": ["BARB", "BARBIE"],
    "SAMANTHA": ["SAM"],
    "STEPHANIE": ["STEPH"],
    "CHRISTINE": ["CHRIS", "CHRISSY"],
    "JAMES": ["JIM", "JIMMY", "JAMIE"],
    "ROBERT": ["BOB", "ROB", "BOBBY", "ROBBIE"],
    "JOHN": ["JACK", "JOHNNY"],
    "MICHAEL": ["MIKE", "MICKEY"],
    "WILLIAM": ["BILL", "WILL", "BILLY", "LIAM"],
    "DAVID": ["DAVE", "DAVEY"],
    "RICHARD": ["RICK", "DICK", "RICH"],
    "JOSEPH": ["JOE", "JOEY"],
    "THOMAS": ["TOM", "TOMMY"],
    "CHARLES": ["CHUCK", "CHARLIE"],
    "CHRISTOPHER": ["CHRIS", "TOPHER"],
    "DANIEL": ["DAN", "DANNY"],
    "MATTHEW": ["MATT"],
    "ANTHONY": ["TONY"],
    "DONALD": ["DON", "DONNIE"],
    "STEVEN": ["STEVE"],
    "ANDREW": ["ANDY", "DREW"],
    "JOSHUA": ["JOSH"],
    "KENNETH": ["KEN", "KENNY"],
    "EDWARD": ["ED", "EDDIE", "TED"],
    "RONALD": ["RON", "RONNIE"],
    "TIMOTHY": ["TIM", "TIMMY"],
    "JEFFREY": ["JEFF"],
    "NICHOLAS": ["NICK"],
    "JONATHAN": ["JON"],
    "GREGORY": ["GREG"],
    "BENJAMIN": ["BEN", "BENNY"],
    "ALEXANDER": ["ALEX"],
    "RAYMOND": ["RAY"],
    "PATRICK": ["PAT", "PADDY"],
    "DENNIS": ["DENNY"],
    "GERALD": ["GERRY", "JERRY"],
}

# nickname -> canonical, for standardization lookups. Built once; when a
# nickname maps to several canonical names the alphabetically first wins.
NICKNAME_TO_CANONICAL: dict[str, str] = {}
for _canon in sorted(NICKNAMES):
    for _nick in NICKNAMES[_canon]:
        NICKNAME_TO_CANONICAL.setdefault(_nick, _canon)

RELATION_TYPES = [
    "spouse", "sibling", "parent", "child", "colleague",
    "household", "friend", "neighbor", "knows",
]

DEFAULT_RELATION_WEIGHTS = {
    "spouse": 4, "sibling": 6, "parent": 5, "child": 5, "colleague": 20,
    "household": 8, "friend": 18, "neighbor": 12, "knows": 22,
}
