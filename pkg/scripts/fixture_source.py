"""Hand-authored source of the bundled dialogue fixtures.

Utterances and model responses are copied verbatim from the published
transcripts where available. Turns flagged ``reconstructed`` fill context the
published excerpts omit; their gold labels are plausible, not upstream data.
Gold states only cover slots introduced inside each excerpt.

Run ``python scripts/build_fixtures.py`` after editing this file.
"""

T = "reconstructed"

MUL2122 = {
    "id": "MUL2122",
    "domains": ["train", "hotel"],
    "turns": [
        {"system": "", "user": "Hello!  I am looking for train schedules from Leicester.  Can you help me with that?",
         "state": {"train-departure": "leicester"},
         "response": 'The following slots were updated by the user:\n{\n"train-departure": "Leicester",\n"train-destination": "?",\n"train-day": "?",\n"train-leaveAt": "?",\n"train-arriveBy": "?",\n"train-book_people": "?"\n}'},
        {"system": "Sure! There are several trains leaving from leicester. What destination, day and time would you like me to search?",
         "user": "I like a train going to cambridge on tuesday please.",
         "state": {"train-departure": "leicester", "train-destination": "cambridge", "train-day": "tuesday"},
         "response": 'The following slots were updated by the user:\n{\n"train-destination": "cambridge",\n"train-day":"tuesday",\n"train-leaveAt":"dontcare",\n"train-arriveBy":"dontcare"\n}'},
        {"system": "Okay.  It looks as if there are trains leaving Leicester for Cambridge every hour starting at 5:09 and ending at 23:09 on Tuesday. ",
         "user": "Pick one. I need the travel time and arrival time. Any one after 20:15.",
         "state": {"train-departure": "leicester", "train-destination": "cambridge", "train-day": "tuesday", "train-leaveAt": "20:15"},
         "requested": ["train-duration"],
         "response": 'The following slots were updated by the user:\n{\n"train-leaveAt":"dontcare",\n"train-arriveBy":"20:15"\n}'},
        {"system": "You have one leaving at 21:09, what time do you want to arrive by?",
         "user": "Thank you that will work fine for me and my husband",
         "state": {"train-departure": "leicester", "train-destination": "cambridge", "train-day": "tuesday", "train-leaveAt": "20:15",
                   "train-book_people": "2"},
         "response": 'The following slots were updated by the user:\n{"train-book_people":"2"}'},
        {"system": "The booking was successful. Your reference number is RWRKP9L6",
         "user": "I also need a hotel with free wifi and free parking. ",
         "state": {"train-departure": "leicester", "train-destination": "cambridge", "train-day": "tuesday", "train-leaveAt": "20:15",
                   "train-book_people": "2", "hotel-internet": "yes", "hotel-parking": "yes"},
         "response": 'The following slots were updated by the user:\n{\n"hotel-parking":"yes",\n"hotel-internet":"yes"\n}'},
        {"system": "I have several excellent options. Did you have an area of town in mind?",
         "user": "No, I just would like a guesthouse. ",
         "state": {"train-departure": "leicester", "train-destination": "cambridge", "train-day": "tuesday", "train-leaveAt": "20:15",
                   "train-book_people": "2", "hotel-internet": "yes", "hotel-parking": "yes", "hotel-type": "guest house",
                   "hotel-area": "dontcare"},
         "response": 'The following slots were updated by the user:\n{\n"hotel-type":"guest house",\n"hotel-area":"dontcare"\n}'},
        {"system": "Sure, I'd suggest Acorn Guest House at 154 Chesterton Road CB41DA. It's moderately priced with 4 stars. Would that work for you?",
         "user": "Can you please make a reservation for just me, for 4 nights starting tuesday?",
         "state": {"train-departure": "leicester", "train-destination": "cambridge", "train-day": "tuesday", "train-leaveAt": "20:15",
                   "train-book_people": "2", "hotel-internet": "yes", "hotel-parking": "yes", "hotel-type": "guest house",
                   "hotel-area": "dontcare", "hotel-name": "acorn guest house", "hotel-book_people": "1",
                   "hotel-book_stay": "4", "hotel-book_day": "tuesday"},
         "response": 'The following slots were updated by the user:\n{\n"hotel-name":"Acorn Guest House",\n"hotel-book_day":"Tuesday",\n"hotel-book_stay":"4",\n"hotel-book_people":"1"\n}'},
        {"system": "Your reference number is HYEDH9O5, anything else I can help you with?",
         "user": "No thank you, you have been very helpful. Have a great day.",
         "state": "same",
         "response": "An empty JSON list, no new slot is updated by the user."},
    ],
}

MUL2405 = {
    "id": "MUL2405",
    "domains": ["restaurant", "attraction"],
    "turns": [
        {"system": "", "user": "Hi. I am having trouble finding a place to eat called prezzo. Can you locate it for me and tell me a little about it please?",
         "state": {"restaurant-name": "prezzo"},
         "response": 'There were no "slots" updated in the "user"\'s latest response to the "system". As per the provided user sentence, the user is seeking information and is not providing any details. Thus the response should be an empty JSON list {}'},
        {"system": "Prezzo is located at 21 - 24 Northampton Road, in the west. It's an italian restaurant. Moderate price range.",
         "user": "That sounds perfect!",
         "state": "same",
         "response": 'The "slots" updated by the "user" in this response are the following:\n\nCopy code\n{\n    "restaurant-name": "prezzo",\n    "restaurant-area": "west",\n    "restaurant-food": "italian",\n    "restaurant-pricerange": "moderate"\n}\nIt\'s worth noting that these slots are updated only because system provided that information in the previous message, if the system have not provided this information, the updated slots should be filled by "?"'},
        {"system": "Would you like me to book you a table?",
         "user": "Not this time but I would like to visit an attraction while in Centre, can you find one for me?",
         "state": {"restaurant-name": "prezzo", "attraction-area": "centre"},
         "response": 'The "slots" updated by the "user" in this response are the following:\n\nCopy code\n{\n    "restaurant-book_people": "dontcare",\n    "restaurant-book_day": "dontcare",\n    "restaurant-book_time": "dontcare",\n    "attraction-area": "centre"\n}\nIt\'s worth noting that restaurant-book_people,restaurant-book_day,restaurant-book_time are updated with "dontcare" since the user doesn\'t care about booking a table.'},
        {"system": "Okay, there's about 44 attractions in the centre of town.  Is there something in particular you'd like?",
         "user": "no, but I will need the address.",
         "state": "same",
         "requested": ["attraction-address"],
         "response": 'The "slots" updated by the "user" in this response are the following:\n\nCopy code\n{\n    "attraction-type": "?",\n    "attraction-name": "?"\n}\nIn this response the user didn\'t give any specific attraction details, so the "slots" of attraction-type and attraction-name are filled with "?" as the user didn\'t specify any preferences.'},
        {"system": "I think you would enjoy Old Schools in the centre of town.  It is an architectural attraction.  The address is trinity lane.",
         "user": "Great, that sounds perfect. Thanks!",
         "state": {"restaurant-name": "prezzo", "attraction-area": "centre", "attraction-name": "old schools"},
         "response": 'The "slots" updated by the "user" in this response are the following:\n\nCopy code\n{\n    "attraction-type":"architectural",\n    "attraction-name":"Old Schools",\n    "attraction-address":"trinity lane"\n}\nThe user is indicating that this attraction is the one they are interested in and thank the system, thus the slots are updated with the provided information.'},
        {"system": "Post code is cb21tt, Trinity lane. Is there anything else I can tell you?",
         "user": "Not today , thank you so much for your help. I appreciate everything you do.",
         "state": "same",
         "response": 'The "slots" updated by the user in this response are the following:\n\nCopy code\n{\n    "attraction-postcode":"cb21tt"\n}\nThe user is indicating the end of their conversation and expressing gratitude, so the system does not receive any new request.'},
        {"system": "Absolutely positively no problem at all! Thanks for using our service. Enjoy your time!",
         "user": "Thanks, I'm all set here. You can end the conversation now.",
         "state": "same",
         "response": 'There were no "slots" updated by the user in this response. The user is indicating the end of the conversation. Thus the response should be an empty JSON list {}'},
    ],
}

_PMUL4050_STATE = {"hotel-name": "autumn house", "hotel-book_people": "8", "hotel-book_stay": "2", "hotel-book_day": "tuesday"}

PMUL4050 = {
    "id": "PMUL4050",
    "domains": ["hotel", "attraction"],
    "turns": [
        {"system": "I'd recommend the Autumn House. Would you like to make a booking?",
         "user": "Yes please. I need the reservation to be for 8 people and 2 nights starting on Tuesday. ",
         "state": dict(_PMUL4050_STATE),
         "response": '{\n"hotel-book_people":"8",\n"hotel-book_stay":"2",\n"hotel-book_day":"Tuesday"\n}'},
        {"system": "Great. I successfully booked your stay. Your reference number is 2OVWNFW1. Is there anything else I can help you with?",
         "user": "I am looking for a particular attraction. Its name is called lynne strover gallery",
         "state": dict(_PMUL4050_STATE, **{"attraction-name": "lynne strover gallery"}),
         "response": '{\n"attraction-name": "lynne strover gallery",\n"attraction-type":"?"\n}'},
        {"system": "The Lynne Strover Gallery is a wonderful museum in the West area of town, it is free to enter.  Would you like the phone number and address perhaps?",
         "user": "Yes, I would also like to know what kind of attraction it is and the entrance fee.",
         "state": "same",
         "requested": ["attraction-fee"],
         "response": '{\n"attraction-type": "?",\n"attraction-fee":"?"\n}'},
        {"system": "It is a museum and it is free entry.",
         "user": "What area is it in?",
         "state": "same",
         "response": '{\n"attraction-area":"west"\n}'},
        {"system": "As stated previously, it is on the west side of town. Is there anything else I can do for you?",
         "user": "No that's all the help I need. Thanks for your help. ",
         "state": "same",
         "response": "{}"},
    ],
}

PMUL0117 = {
    "id": "PMUL0117",
    "domains": ["hotel", "restaurant", "taxi"],
    "turns": [
        {"system": "", "user": "I'm staying at the gonville hotel. Can you book me a table at la mimosa for 13:30?",
         "state": {"hotel-name": "the gonville hotel", "restaurant-name": "la mimosa", "restaurant-book_time": "13:30"},
         "note": T,
         "response": '{\n"hotel-name": "the gonville hotel",\n"restaurant-name": "la mimosa",\n"restaurant-book_time": "13:30"\n}'},
        {"system": "I have booked your table. Your reference number is 8WQXBH2L. Is there anything else I can help with?",
         "user": "Yes I also need a taxi that will get me to the restaurant by the booked time please.",
         "state": {"hotel-name": "the gonville hotel", "restaurant-name": "la mimosa", "restaurant-book_time": "13:30",
                   "taxi-destination": "the gonville hotel", "taxi-departure": "la mimosa"},
         "note": "system utterance and response reconstructed; user utterance and labels published",
         "response": '{\n"taxi-destination": "hotel",\n"taxi-departure": "restaurant"\n}'},
    ],
}

SNG01873 = {
    "id": "SNG01873",
    "domains": ["taxi"],
    "turns": [
        {"system": "", "user": "I need to be picked up from pizza hut city centre after 04:30",
         "state": {"taxi-departure": "pizza hut city centre", "taxi-leaveAt": "04:30"},
         "response": "{\n" + ",\n".join(
             f'"{k}": "{v}"' for k, v in [
                 ("taxi-leaveAt", "04:30"), ("taxi-destination", "pizza hut city centre"), ("taxi-departure", "?"),
                 ("taxi-arriveBy", "dontcare"), ("restaurant-book_people", "dontcare"), ("restaurant-book_day", "dontcare"),
                 ("restaurant-book_time", "dontcare"), ("restaurant-food", "dontcare"), ("restaurant-pricerange", "dontcare"),
                 ("restaurant-name", "dontcare"), ("restaurant-area", "dontcare"), ("hotel-book_people", "dontcare"),
                 ("hotel-book_day", "dontcare"), ("hotel-book_stay", "dontcare"), ("hotel-name", "dontcare"),
                 ("hotel-area", "dontcare"), ("hotel-parking", "dontcare"), ("hotel-pricerange", "dontcare"),
                 ("hotel-stars", "dontcare"), ("hotel-internet", "dontcare"), ("hotel-type", "dontcare"),
                 ("attraction-type", "dontcare"), ("attraction-name", "dontcare"), ("attraction-area", "dontcare"),
                 ("train-book_people", "dontcare"), ("train-leaveAt", "dontcare"), ("train-destination", "dontcare"),
                 ("train-day", "dontcare"), ("train-arriveBy", "dontcare"), ("train-departure", "dontcare"),
             ]) + "\n}"},
    ],
}

MUL2051 = {
    "id": "MUL2051",
    "domains": ["hotel"],
    "turns": [
        {"system": "Your booking was successful. Is there anything else I can help you with?",
         "user": "Can I get address and postcode for the hotel?",
         "state": {},
         "requested": ["hotel-address", "hotel-postcode"],
         "note": "system utterance and response wording reconstructed",
         "response": '{\n"hotel-address": "?",\n"hotel-postcode": "?"\n}'},
        {"system": "The address is 74 chesterton road, the postal code is cb41er, can I assist with anything else?",
         "user": "That is all for now, goodbye.",
         "state": "same",
         "note": "response wording reconstructed",
         "response": '{\n"hotel-address": "74 chesterton road",\n"hotel-postcode": "cb41er"\n}'},
    ],
}

MUL0524 = {
    "id": "MUL0524",
    "domains": ["train"],
    "turns": [
        {"system": "The cambridge and county folk museum is located at 2-3 castle street postcode cb30aq , it has an entrance fee of 3.50 pounds. ",
         "user": "Thanks.  Now I need to book a train from Norwich.",
         "state": {"train-departure": "norwich"},
         "response": '{\n"train-departure": "Norwich",\n"train-destination": "?",\n"train-leaveAt": "?",\n"train-day": "?",\n"train-arriveBy": "?",\n"train-book_people":"?"\n}'},
        {"system": "There are 133 trains leaving norwich. What day and time are you interested in?",
         "user": "I'm going to Cambridge on saturday and want to arrive by 14:15 please.",
         "state": {"train-departure": "norwich", "train-destination": "cambridge", "train-day": "saturday", "train-arriveBy": "14:15"},
         "response": '{\n"train-destination": "Cambridge",\n"train-day": "Saturday",\n"train-arriveBy": "14:15"\n}'},
    ],
}

PMUL4246 = {
    "id": "PMUL4246",
    "domains": ["attraction"],
    "turns": [
        {"system": "", "user": "i need a place to go and should be a museum",
         "state": {"attraction-type": "museum"},
         "note": "response wording reconstructed",
         "response": '{\n"attraction-type": "museum"\n}'},
        {"system": "Okay! There are several museums in Cambridge. What part of town would you like to visit?",
         "user": "How about ones in the centre, what's available?",
         "state": {"attraction-type": "museum", "attraction-area": "centre"},
         "note": "response wording reconstructed",
         "response": '{\n"attraction-type": "museum",\n"attraction-area": "centre"\n}'},
    ],
}

_MUL2116_T2 = {"hotel-internet": "yes", "hotel-type": "guest house", "hotel-area": "dontcare",
               "hotel-pricerange": "dontcare", "hotel-parking": "yes"}

MUL2116 = {
    "id": "MUL2116",
    "domains": ["hotel"],
    "turns": [
        {"system": "", "user": "Yes, can you tell me information on Cambridge lodgings?  We are looking for free wifi and a nice guesthouse.",
         "state": {"hotel-internet": "yes", "hotel-type": "guest house"},
         "response": '{\n"hotel-name": "?",\n"hotel-area": "?",\n"hotel-parking": "dontcare",\n"hotel-pricerange": "dontcare",\n"hotel-stars": "dontcare",\n"hotel-internet": "yes",\n"hotel-type": "guest house"\n}'},
        {"system": "Sure. What area and price range are you looking for?",
         "user": "I don't really care about area or price range, the most important thing for me is free wifi in a guesthouse that has free parking.",
         "state": dict(_MUL2116_T2),
         "response": '{\n"hotel-name": "?",\n"hotel-area": "dontcare",\n"hotel-parking": "yes",\n"hotel-pricerange": "dontcare",\n"hotel-stars": "dontcare",\n"hotel-internet": "yes",\n"hotel-type": "guest house"\n}'},
        {"system": "I've got over 20 guesthouses that will work with those requirements.  Would you like me to book a moderately priced 4 star? ",
         "user": "As long as it has free wifi and parking then yes.",
         "state": "same",
         "response": '{\n"hotel-name": "?",\n"hotel-area": "dontcare",\n"hotel-parking": "yes",\n"hotel-pricerange": "moderate",\n"hotel-stars": "4",\n"hotel-internet": "yes",\n"hotel-type": "guest house"\n}'},
        {"system": "I would recommend the Acorn Guest House on the north side of town.  It has 4-stars.  Should I book this?",
         "user": "Yes. Please book it for 8 people for 5 nights starting from sunday.",
         "state": dict(_MUL2116_T2, **{"hotel-name": "acorn guest house", "hotel-book_people": "8",
                                      "hotel-book_day": "sunday", "hotel-book_stay": "5"}),
         "response": '{\n"hotel-name": "Acorn Guest House",\n"hotel-area": "north",\n"hotel-parking": "yes",\n"hotel-pricerange": "moderate",\n"hotel-stars": "4",\n"hotel-internet": "yes",\n"hotel-type": "guest house",\n"hotel-book_people": "8",\n"hotel-book_day": "sunday",\n"hotel-book_stay":"5"\n}'},
    ],
}

# supplementary excerpts: the remaining published error instances

PMUL0599 = {
    "id": "PMUL0599",
    "domains": ["restaurant"],
    "turns": [
        {"system": "", "user": "Can you just help me find a high-end Mexican restaurant?",
         "state": {"restaurant-food": "mexican", "restaurant-pricerange": "expensive"},
         "note": "leading part of the user utterance is elided in the source; response wording reconstructed",
         "response": '{\n"restaurant-food": "mexican",\n"restaurant-pricerange": "high-end"\n}'},
    ],
}

_MUL1228_T1 = {"hotel-name": "cityroomz", "hotel-book_people": "1", "hotel-book_day": "friday", "hotel-book_stay": "3"}

MUL1228 = {
    "id": "MUL1228",
    "domains": ["hotel", "taxi"],
    "turns": [
        {"system": "I have one hotel in the moderate range, cityroomz. Would you like me to book it for you?",
         "user": "Yes, please. Can you book a room for Friday for 1 person, 3 nights?",
         "state": dict(_MUL1228_T1),
         "response": '{\n"hotel-name": "cityroomz",\n"hotel-book_people": "1",\n"hotel-book_day": "Friday",\n"hotel-book_stay": "3"\n}'},
        {"system": "Your reservation has been made. Reference number DTONYTIH. Is there anything else I can help you with?",
         "user": "I need to book a taxi to get me to the restaurant by 21:30.",
         "state": dict(_MUL1228_T1, **{"taxi-arriveBy": "21:30"}),
         "response": '{\n"taxi-destination": "?",\n"taxi-arriveBy": "21:30",\n"taxi-leaveAt": "dontcare",\n"taxi-departure": "dontcare"\n}'},
        {"system": "Will you be departing from your hotel?",
         "user": "No, I'd like to leave the restaurant by 21:30, I need the taxi to take me to the hotel.",
         "state": dict(_MUL1228_T1, **{"taxi-destination": "cityroomz", "taxi-leaveAt": "21:30"}),
         "response": '{\n"taxi-destination": "hotel",\n"taxi-leaveAt": "21:30",\n"taxi-arriveBy": "dontcare",\n"taxi-departure": "restaurant"\n}'},
    ],
}

MUL0540 = {
    "id": "MUL0540",
    "domains": ["attraction"],
    "turns": [
        {"system": "Booking was successful, the total fee is 188.8 GBP payable at the station. Reference number is: 31K4BK2E. Is there anything else you need?",
         "user": "Yes, I am also looking for a multiple sports attraction in the city centre. Are you aware of any?",
         "state": {"attraction-type": "multiple sports", "attraction-area": "centre"},
         "response": '{\n"attraction-type":"multiple sports",\n"attraction-area":"city centre"\n}'},
        {"system": "Unfortunately, there are no multiple sports attractions in the area you specified. Is there some other type of attraction or area I can look into for you?",
         "user": "Alright, that's fine, how about colleges? Are there any of those in the city centre?",
         "state": {"attraction-type": "college", "attraction-area": "centre"},
         "response": '{\n"attraction-type":"colleges",\n"attraction-area":"city centre"\n}'},
    ],
}

_MUL0671_T1 = {"hotel-name": "acorn guest house", "hotel-book_people": "7", "hotel-book_day": "saturday", "hotel-book_stay": "5"}

MUL0671 = {
    "id": "MUL0671",
    "domains": ["hotel"],
    "turns": [
        {"system": "Cambridge has 8 moderately priced guesthouses in the north.  I would suggest Acorn Guest House, with a star rating of 4.  Would you like me to book it?",
         "user": "Yes please, I would like to book it for 7 people for 5 nights on Saturday, and I need a reference number.",
         "state": dict(_MUL0671_T1),
         "requested": ["hotel-reference_number"],
         "response": '{\n"hotel-name":"Acorn Guest House",\n"hotel-stars":"4",\n"hotel-book_people":"7",\n"hotel-book_day":"Saturday",\n"hotel-book_stay":"5",\n"hotel-reference_number":"?"\n}'},
        {"system": "I'm very sorry I was unable to book at acorn guest house for 5 nights, would you like to try for a shorter stay?",
         "user": "Yes, please try to book it for four nights instead.",
         "state": dict(_MUL0671_T1, **{"hotel-book_stay": "4"}),
         "response": '{\n"hotel-book_stay":"4"\n}'},
        {"system": "Your booking was successful, the reference number is WAEYAQ0M.  May I assist you with anything else today?",
         "user": "No, that should be all for now. Thank you for the help!",
         "state": "same",
         "response": '{\n"hotel-reference_number":"WAEYAQ0M"\n}'},
    ],
}

MAIN = [PMUL4050, PMUL0117, SNG01873, MUL2051, MUL0524, PMUL4246, MUL2122, MUL2405, MUL2116]
EXTRA = [PMUL0599, MUL1228, MUL0540, MUL0671]

# Slot-value pairs printed in the publication for each shown turn.
# "elided": the source abbreviates the prediction with "...", so only a subset is shown.
# "absent": slots the source marks as not predicted.
PUBLISHED_PREDICTIONS = {
    "MUL2122": [
        {"turn": 1, "pairs": {"train-departure": "Leicester", "train-destination": "?", "train-day": "?", "train-leaveAt": "?", "train-arriveBy": "?", "train-book_people": "?"}},
        {"turn": 2, "pairs": {"train-destination": "cambridge", "train-day": "tuesday", "train-leaveAt": "dontcare", "train-arriveBy": "dontcare"}},
        {"turn": 3, "pairs": {"train-leaveAt": "dontcare", "train-arriveBy": "20:15"}},
        {"turn": 4, "pairs": {"train-book_people": "2"}},
        {"turn": 5, "pairs": {"hotel-parking": "yes", "hotel-internet": "yes"}},
        {"turn": 6, "pairs": {"hotel-type": "guest house", "hotel-area": "dontcare"}},
        {"turn": 7, "pairs": {"hotel-name": "Acorn Guest House", "hotel-book_day": "Tuesday", "hotel-book_stay": "4", "hotel-book_people": "1"}},
        {"turn": 8, "pairs": {}},
    ],
    "MUL2405": [
        {"turn": 1, "pairs": {}},
        {"turn": 2, "pairs": {"restaurant-name": "prezzo", "restaurant-area": "west", "restaurant-food": "italian", "restaurant-pricerange": "moderate"}},
        {"turn": 3, "pairs": {"restaurant-book_people": "dontcare", "restaurant-book_day": "dontcare", "restaurant-book_time": "dontcare", "attraction-area": "centre"}},
        {"turn": 4, "pairs": {"attraction-type": "?", "attraction-name": "?"}},
        {"turn": 5, "pairs": {"attraction-type": "architectural", "attraction-name": "Old Schools", "attraction-address": "trinity lane"}},
        {"turn": 6, "pairs": {"attraction-postcode": "cb21tt"}},
        {"turn": 7, "pairs": {}},
    ],
    "PMUL4050": [
        {"turn": 1, "pairs": {"hotel-book_people": "8", "hotel-book_stay": "2", "hotel-book_day": "Tuesday"}, "absent": ["hotel-name"]},
        {"turn": 2, "pairs": {"attraction-name": "lynne strover gallery", "attraction-type": "?"}},
        {"turn": 3, "pairs": {"attraction-type": "?", "attraction-fee": "?"}},
        {"turn": 4, "pairs": {"attraction-area": "west"}},
        {"turn": 5, "pairs": {}},
    ],
    "PMUL0117": [
        {"turn": 2, "pairs": {"taxi-destination": "hotel", "taxi-departure": "restaurant"}},
    ],
    "SNG01873": [
        {"turn": 1, "pairs": {"hotel-name": "dontcare", "attraction-type": "dontcare"}, "elided": True},
        {"turn": 1, "pairs": {"taxi-leaveAt": "04:30", "taxi-destination": "pizza hut city centre", "taxi-departure": "?",
                              "taxi-arriveBy": "dontcare", "restaurant-book_people": "dontcare", "restaurant-book_day": "dontcare",
                              "restaurant-book_time": "dontcare", "restaurant-food": "dontcare", "restaurant-pricerange": "dontcare",
                              "restaurant-name": "dontcare", "restaurant-area": "dontcare", "hotel-book_people": "dontcare",
                              "hotel-book_day": "dontcare", "hotel-book_stay": "dontcare", "hotel-name": "dontcare",
                              "hotel-area": "dontcare", "hotel-parking": "dontcare", "hotel-pricerange": "dontcare",
                              "hotel-stars": "dontcare", "hotel-internet": "dontcare", "hotel-type": "dontcare",
                              "attraction-type": "dontcare", "attraction-name": "dontcare", "attraction-area": "dontcare",
                              "train-book_people": "dontcare", "train-leaveAt": "dontcare", "train-destination": "dontcare",
                              "train-day": "dontcare", "train-arriveBy": "dontcare", "train-departure": "dontcare"}},
    ],
    "MUL2051": [
        {"turn": 1, "pairs": {"hotel-address": "?", "hotel-postcode": "?"}},
        {"turn": 2, "pairs": {"hotel-address": "74 chesterton road", "hotel-postcode": "cb41er"}},
    ],
    "MUL0524": [
        {"turn": 1, "pairs": {"train-departure": "Norwich", "train-destination": "?", "train-leaveAt": "?", "train-day": "?", "train-arriveBy": "?", "train-book_people": "?"}},
        {"turn": 2, "pairs": {"train-destination": "Cambridge", "train-day": "Saturday", "train-arriveBy": "14:15"}},
    ],
    "PMUL4246": [
        {"turn": 1, "pairs": {"attraction-type": "museum"}},
        {"turn": 2, "pairs": {"attraction-type": "museum", "attraction-area": "centre"}},
    ],
    "MUL2116": [
        {"turn": 1, "pairs": {"hotel-name": "?", "hotel-area": "?", "hotel-parking": "dontcare", "hotel-pricerange": "dontcare", "hotel-stars": "dontcare", "hotel-internet": "yes", "hotel-type": "guest house"}},
        {"turn": 2, "pairs": {"hotel-name": "?", "hotel-area": "dontcare", "hotel-parking": "yes", "hotel-pricerange": "dontcare", "hotel-stars": "dontcare", "hotel-internet": "yes", "hotel-type": "guest house"}},
        {"turn": 3, "pairs": {"hotel-name": "?", "hotel-area": "dontcare", "hotel-parking": "yes", "hotel-pricerange": "moderate", "hotel-stars": "4", "hotel-internet": "yes", "hotel-type": "guest house"}},
        {"turn": 4, "pairs": {"hotel-name": "Acorn Guest House", "hotel-area": "north", "hotel-parking": "yes", "hotel-pricerange": "moderate", "hotel-stars": "4", "hotel-internet": "yes", "hotel-type": "guest house", "hotel-book_people": "8", "hotel-book_day": "sunday", "hotel-book_stay": "5"}},
    ],
    "PMUL0599": [
        {"turn": 1, "pairs": {"restaurant-pricerange": "high-end"}, "elided": True},
    ],
    "MUL1228": [
        {"turn": 1, "pairs": {"hotel-name": "cityroomz", "hotel-book_people": "1", "hotel-book_day": "Friday", "hotel-book_stay": "3"}},
        {"turn": 2, "pairs": {"taxi-destination": "?", "taxi-arriveBy": "21:30", "taxi-leaveAt": "dontcare", "taxi-departure": "dontcare"}},
        {"turn": 3, "pairs": {"taxi-destination": "hotel", "taxi-leaveAt": "21:30", "taxi-arriveBy": "dontcare", "taxi-departure": "restaurant"}},
    ],
    "MUL0540": [
        {"turn": 1, "pairs": {"attraction-type": "multiple sports", "attraction-area": "city centre"}},
        {"turn": 2, "pairs": {"attraction-type": "colleges", "attraction-area": "city centre"}},
    ],
    "MUL0671": [
        {"turn": 1, "pairs": {"hotel-name": "Acorn Guest House", "hotel-stars": "4", "hotel-book_people": "7", "hotel-book_day": "Saturday", "hotel-book_stay": "5", "hotel-reference_number": "?"}},
        {"turn": 2, "pairs": {"hotel-book_stay": "4"}},
        {"turn": 3, "pairs": {"hotel-reference_number": "WAEYAQ0M"}},
    ],
}
